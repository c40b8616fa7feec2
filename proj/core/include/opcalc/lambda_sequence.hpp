#pragma once

#include "opcalc/operad.hpp"
#include "opcalc/text_util.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcalc {

/// Contravariant functor on finite sets and injections, given arity-wise.
template <class Y>
concept LambdaSequence = requires(const Y& seq, const typename Y::Element& x, const InjectiveMap& u) {
    typename Y::Element;
    requires std::equality_comparable<typename Y::Element>;
    { seq.arity(x) } -> std::convertible_to<std::size_t>;
    { seq.act(u, x) } -> std::same_as<typename Y::Element>;
};

/// Λ-sequences whose components are finite and listable.
template <class Y>
concept FiniteLambdaSequence = LambdaSequence<Y> && requires(const Y& seq, std::size_t n) {
    { seq.enumerate(n) } -> std::same_as<std::vector<typename Y::Element>>;
};

/// Finite pointed set; index 0 is the basepoint.
struct PointedSet {
    std::vector<std::string> names{"*"};

    std::size_t size() const { return names.size(); }
    std::size_t index_of(const std::string& name) const {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw std::domain_error("'" + name + "' is not an element of X");
        return static_cast<std::size_t>(it - names.begin());
    }
};

/// X^{×•}: arity n holds maps [n] -> X, u* is precomposition.
class SetPowers {
public:
    using Element = std::vector<std::size_t>;

    explicit SetPowers(PointedSet x) : x_(std::move(x)) {}
    std::size_t arity(const Element& e) const { return e.size(); }
    Element act(const InjectiveMap& u, const Element& e) const {
        require_arity(u.codomain(), e.size(), "power lambda action");
        Element out;
        for (std::size_t j = 1; j <= u.domain(); ++j) out.push_back(e[u(j) - 1]);
        return out;
    }
    std::vector<Element> enumerate(std::size_t n) const {
        std::vector<Element> out{Element{}};
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Element> next;
            for (const auto& e : out)
                for (std::size_t v = 0; v < x_.size(); ++v) {
                    next.push_back(e);
                    next.back().push_back(v);
                }
            out = std::move(next);
        }
        return out;
    }
    const PointedSet& set() const { return x_; }

private:
    PointedSet x_;
};

template <class E>
struct Tagged {
    E value;
    std::vector<std::size_t> tags;  // indices into the pointed set

    friend bool operator==(const Tagged&, const Tagged&) = default;
    friend auto operator<=>(const Tagged&, const Tagged&) = default;
};

/// Y∘X: the objectwise product of Y with X^{×•}, with the diagonal Λ-action.
template <LambdaSequence Y>
class ProductWithSet {
public:
    using Element = Tagged<typename Y::Element>;

    ProductWithSet(Y y, PointedSet x) : y_(std::move(y)), x_(std::move(x)) {}

    std::size_t arity(const Element& e) const { return y_.arity(e.value); }
    Element act(const InjectiveMap& u, const Element& e) const {
        return {y_.act(u, e.value), SetPowers(x_).act(u, e.tags)};
    }
    std::vector<Element> enumerate(std::size_t n) const
        requires FiniteLambdaSequence<Y>
    {
        std::vector<Element> out;
        for (const auto& y : y_.enumerate(n))
            for (const auto& t : SetPowers(x_).enumerate(n)) out.push_back({y, t});
        return out;
    }
    const Y& factor() const { return y_; }
    const PointedSet& set() const { return x_; }

private:
    Y y_;
    PointedSet x_;
};

template <LambdaSequence Y>
ProductWithSet<Y> product_lambda_sequence(Y y, PointedSet x) {
    if (x.size() == 0) throw std::domain_error("pointed set must be nonempty");
    return {std::move(y), std::move(x)};
}

/// A point of the matching object M(Y)(n): entries indexed by order-preserving u : [i] -> [n], i < n.
template <class E>
struct MatchingFamily {
    std::size_t n = 1;
    std::map<InjectiveMap, E> entries;
};

/// Every order-preserving proper injection into [n] (1 <= i < n).
inline std::vector<InjectiveMap> matching_index(std::size_t n) {
    std::vector<InjectiveMap> out;
    for (std::size_t i = 1; i < n; ++i)
        for (auto& u : all_order_preserving(i, n)) out.push_back(u);
    return out;
}

template <LambdaSequence Y>
MatchingFamily<typename Y::Element> matching_restrict(const Y& seq, const typename Y::Element& y) {
    MatchingFamily<typename Y::Element> f;
    f.n = seq.arity(y);
    if (f.n < 1) throw std::domain_error("matching object needs arity >= 1");
    for (auto& u : matching_index(f.n)) f.entries.emplace(u, seq.act(u, y));
    return f;
}

/// True iff y_{u∘v} = v*(y_u) for all composable order-preserving u, v.
/// Throws std::domain_error if an index is missing.
template <LambdaSequence Y>
bool is_matching_compatible(const Y& seq, const MatchingFamily<typename Y::Element>& f) {
    auto get = [&](const InjectiveMap& u) -> const typename Y::Element& {
        auto it = f.entries.find(u);
        if (it == f.entries.end()) throw std::domain_error("matching family misses index " + u.str());
        return it->second;
    };
    for (auto& u : matching_index(f.n)) {
        const auto& yu = get(u);
        if (seq.arity(yu) != u.domain()) return false;
        for (std::size_t j = 1; j < u.domain(); ++j)
            for (auto& v : all_order_preserving(j, u.domain()))
                if (!(get(u.after(v)) == seq.act(v, yu))) return false;
    }
    return true;
}

/// Lists M(Y)(n) by backtracking over the index category, checking compatibility against
/// every smaller entry as soon as it is assigned.
template <FiniteLambdaSequence Y>
std::vector<MatchingFamily<typename Y::Element>> enumerate_matching_object(const Y& seq, std::size_t n) {
    using E = typename Y::Element;
    const auto index = matching_index(n);  // sorted by domain size
    std::vector<MatchingFamily<E>> out;
    MatchingFamily<E> cur;
    cur.n = n;
    std::map<std::size_t, std::vector<E>> cache;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == index.size()) {
            out.push_back(cur);
            return;
        }
        const auto& u = index[k];
        if (!cache.count(u.domain())) cache[u.domain()] = seq.enumerate(u.domain());
        for (const auto& cand : cache[u.domain()]) {
            bool ok = true;
            for (std::size_t j = 1; ok && j < u.domain(); ++j)
                for (auto& v : all_order_preserving(j, u.domain()))
                    if (!(cur.entries.at(u.after(v)) == seq.act(v, cand))) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            cur.entries.insert_or_assign(u, cand);
            rec(k + 1);
            cur.entries.erase(u);
        }
    };
    rec(0);
    return out;
}

/// k-truncation: arities above k are empty; structure maps landing above k are undefined.
template <EffectiveOperad O>
class Truncated {
public:
    using Element = typename O::Element;

    Truncated(O op, std::size_t k) : op_(std::move(op)), k_(k) {
        if (k_ < 1) throw std::domain_error("truncation level must be >= 1");
    }

    std::size_t level() const { return k_; }
    bool contains(std::size_t arity) const { return arity >= 1 && arity <= k_; }
    std::string name() const { return op_.name() + "<=" + std::to_string(k_); }
    std::size_t arity(const Element& x) const { return op_.arity(x); }
    Element unit() const { return op_.unit(); }
    Element compose(const Element& x, std::size_t i, const Element& y) const {
        check(arity(x));
        check(arity(y));
        check(arity(x) + arity(y) - 1);
        return op_.compose(x, i, y);
    }
    Element act(const InjectiveMap& u, const Element& x) const {
        check(arity(x));
        return op_.act(u, x);
    }
    std::string to_string(const Element& x) const { return op_.to_string(x); }
    std::vector<Element> enumerate(std::size_t n) const
        requires FiniteLambdaSequence<O>
    {
        return contains(n) ? op_.enumerate(n) : std::vector<Element>{};
    }
    const O& untruncated() const { return op_; }

private:
    void check(std::size_t n) const {
        if (!contains(n))
            throw std::domain_error("arity " + std::to_string(n) + " is empty in the " + std::to_string(k_) +
                                    "-truncation");
    }
    O op_;
    std::size_t k_;
};

template <EffectiveOperad O>
Truncated<O> truncate(O op, std::size_t k) {
    return {std::move(op), k};
}

template <EffectiveOperad O>
Truncated<O> truncate(const Truncated<O>& t, std::size_t k) {
    return {t.untruncated(), std::min(k, t.level())};
}

}  // namespace opcalc
