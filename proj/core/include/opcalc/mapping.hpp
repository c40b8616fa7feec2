#pragma once

#include "opcalc/axioms.hpp"
#include "opcalc/b_construction.hpp"
#include "opcalc/check_report.hpp"
#include "opcalc/lambda_sequence.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

/// An evaluable operad map W𝒫 → 𝒬.
template <class WE, class QE>
struct OperadMap {
    std::string name;
    std::function<QE(const WE&)> eval;

    QE operator()(const WE& y) const { return eval(y); }
};

/// η∘μ : W𝒫 → 𝒫 → 𝒬.
template <EffectiveOperad P, class Eta>
auto eta_mu(const WOperad<P>& w, Eta eta, std::string name = "eta_mu") {
    using QE = std::decay_t<decltype(eta(std::declval<typename P::Element>()))>;
    return OperadMap<WPoint<typename P::Element>, QE>{std::move(name), [&w, eta](const WPoint<typename P::Element>& y) {
                                                          return eta(w.mu(y));
                                                      }};
}

/// a∘δ for an operad endomorphism a of the target.
template <class WE, class QE, class Aut>
OperadMap<WE, QE> then(const OperadMap<WE, QE>& delta, Aut a, std::string name) {
    return {std::move(name), [delta, a](const WE& y) { return a(delta(y)); }};
}

/// A one-parameter family t ↦ g(−, t) of operad maps, evaluated exactly at rational times.
/// `breakpoints` lists the interior times where the formula changes.
template <class WE, class QE>
struct PathOfMaps {
    std::string name;
    std::vector<Rational> breakpoints;
    std::function<QE(const WE&, const Rational&)> eval;

    QE operator()(const WE& y, const Rational& t) const {
        if (t < Rational(0) || t > Rational(1)) throw std::domain_error("path time " + t.str() + " outside [0,1]");
        return eval(y, t);
    }
    OperadMap<WE, QE> at(const Rational& t) const {
        return {name + "@" + t.str(), [g = *this, t](const WE& y) { return g(y, t); }};
    }
};

/// pieces[k] is in force on [breaks[k-1], breaks[k]); the last piece also at t = 1.
template <class WE, class QE>
PathOfMaps<WE, QE> piecewise_path(std::vector<OperadMap<WE, QE>> pieces, std::vector<Rational> breaks) {
    if (pieces.size() != breaks.size() + 1) throw std::invalid_argument("piecewise path: need one more piece than breaks");
    for (std::size_t k = 0; k < breaks.size(); ++k) {
        if (breaks[k] <= Rational(0) || breaks[k] >= Rational(1))
            throw std::invalid_argument("piecewise path: break " + breaks[k].str() + " not inside ]0,1[");
        if (k > 0 && breaks[k] <= breaks[k - 1]) throw std::invalid_argument("piecewise path: breaks must increase");
    }
    std::string name;
    for (std::size_t k = 0; k < pieces.size(); ++k) name += (k ? " | " : "") + pieces[k].name;
    return {name, breaks, [pieces, breaks](const WE& y, const Rational& t) {
                std::size_t k = 0;
                while (k < breaks.size() && t >= breaks[k]) ++k;
                return pieces[k](y);
            }};
}

template <class WE, class QE>
PathOfMaps<WE, QE> constant_path(OperadMap<WE, QE> delta) {
    return piecewise_path<WE, QE>({std::move(delta)}, {});
}

/// δ : X → Operad(W𝒫, 𝒬) on a finite pointed set; maps[0] is δ_* = η∘μ.
template <class WE, class QE>
struct PointedMapFamily {
    PointedSet set;
    std::vector<OperadMap<WE, QE>> maps;

    const OperadMap<WE, QE>& operator()(std::size_t x) const {
        if (x >= maps.size()) throw std::domain_error("element " + std::to_string(x) + " is not in X");
        return maps[x];
    }
    const OperadMap<WE, QE>& base() const { return maps.at(0); }
};

/// A point (x, g) of the homotopy fiber: g runs from δ_* at t = 0 to δ_x at t = 1.
template <class WE, class QE>
struct HofiberPoint {
    std::size_t x = 0;
    PathOfMaps<WE, QE> g;
};

/// A random piecewise path from δ_* to δₓ through maps of the family, with up to `max_breaks`
/// breaks at rationals of denominator 12.
template <class WE, class QE>
HofiberPoint<WE, QE> random_hofiber_point(Rng& rng, const PointedMapFamily<WE, QE>& delta, std::size_t max_breaks = 2,
                                          std::optional<std::size_t> x = std::nullopt) {
    HofiberPoint<WE, QE> h;
    h.x = x ? *x : uniform(rng, 0, delta.set.size() - 1);
    std::size_t k = uniform(rng, h.x == 0 ? 0 : 1, std::max<std::size_t>(max_breaks, 1));
    std::vector<Rational> breaks;
    while (breaks.size() < k) {
        const auto b = Rational(static_cast<long>(uniform(rng, 1, 11)), 12);
        if (std::find(breaks.begin(), breaks.end(), b) == breaks.end()) breaks.push_back(b);
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<OperadMap<WE, QE>> pieces{delta.base()};
    for (std::size_t j = 1; j < k; ++j) pieces.push_back(delta(uniform(rng, 0, delta.set.size() - 1)));
    if (k > 0) pieces.push_back(delta(h.x));
    h.g = piecewise_path(std::move(pieces), std::move(breaks));
    return h;
}

template <class BE, class ME>
struct BimoduleMap {
    std::string name;
    std::function<ME(const BE&)> eval;

    ME operator()(const BE& b) const { return eval(b); }
};

/// 𝒬ₓ: right action through δₓ, left action through δ_*.
template <EffectiveOperad Q, class WE>
class TwistedBimodule {
public:
    using Element = typename Q::Element;
    using Map = OperadMap<WE, Element>;

    TwistedBimodule(const Q& q, Map left_map, Map right_map)
        : q_(&q), left_(std::move(left_map)), right_(std::move(right_map)) {}

    std::string name() const { return q_->name() + "[" + right_.name + "]"; }
    std::size_t arity(const Element& e) const { return q_->arity(e); }
    Element left(const WE& p, const std::vector<Element>& qs) const { return gamma(*q_, left_(p), qs); }
    Element right(const Element& e, std::size_t i, const WE& p) const { return q_->compose(e, i, right_(p)); }
    Element act(const InjectiveMap& u, const Element& e) const { return q_->act(u, e); }
    std::string to_string(const Element& e) const { return q_->to_string(e); }
    Element sample(Rng& rng, std::size_t n) const
        requires SampleableOperad<Q>
    {
        return q_->sample(rng, n);
    }
    const Q& target() const { return *q_; }

private:
    const Q* q_;
    Map left_;
    Map right_;
};

template <EffectiveOperad Q, class WE>
TwistedBimodule<Q, WE> make_qx_bimodule(const Q& q, const PointedMapFamily<WE, typename Q::Element>& delta,
                                        std::size_t x) {
    return {q, delta.base(), delta(x)};
}

/// 𝒬∘X: pairs (q; x₁..xₙ). The right action at input i goes through δ_{xᵢ} and repeats xᵢ;
/// the left action goes through δ_* and concatenates tags.
template <EffectiveOperad Q, class WE>
class FiberBundleBimodule {
public:
    using QElement = typename Q::Element;
    using Element = Tagged<QElement>;
    using Family = PointedMapFamily<WE, QElement>;

    FiberBundleBimodule(const Q& q, const Family& delta) : q_(&q), delta_(&delta) {}

    std::string name() const { return q_->name() + "∘X"; }
    std::size_t arity(const Element& e) const { return q_->arity(e.value); }

    Element left(const WE& p, const std::vector<Element>& args) const {
        std::vector<QElement> values;
        Element out;
        for (const auto& a : args) {
            values.push_back(a.value);
            out.tags.insert(out.tags.end(), a.tags.begin(), a.tags.end());
        }
        out.value = gamma(*q_, delta_->base()(p), values);
        return out;
    }

    Element right(const Element& e, std::size_t i, const WE& p) const {
        require_input(i, arity(e), "Q∘X right action");
        const auto x = e.tags[i - 1];
        const auto image = (*delta_)(x)(p);
        Element out{q_->compose(e.value, i, image), {}};
        out.tags.assign(e.tags.begin(), e.tags.begin() + static_cast<long>(i - 1));
        out.tags.insert(out.tags.end(), q_->arity(image), x);
        out.tags.insert(out.tags.end(), e.tags.begin() + static_cast<long>(i), e.tags.end());
        return out;
    }

    Element act(const InjectiveMap& u, const Element& e) const {
        Element out{q_->act(u, e.value), {}};
        for (std::size_t j = 1; j <= u.domain(); ++j) out.tags.push_back(e.tags.at(u(j) - 1));
        return out;
    }

    std::string to_string(const Element& e) const {
        std::string s = "(" + q_->to_string(e.value);
        for (auto x : e.tags) s += ", " + delta_->set.names.at(x);
        return s + ")";
    }

    Element sample(Rng& rng, std::size_t n) const
        requires SampleableOperad<Q>
    {
        Element out{q_->sample(rng, n), {}};
        for (std::size_t j = 0; j < n; ++j) out.tags.push_back(uniform(rng, 0, delta_->set.size() - 1));
        return out;
    }

private:
    const Q* q_;
    const Family* delta_;
};

/// Replaces every vertex by label(vertex) ∈ 𝒬 and composes along the tree.
template <EffectiveOperad Q, class E, class Label>
typename Q::Element evaluate_vertexwise(const Q& q, const BPoint<E>& b, Label&& label) {
    const auto& t = b.t.tree;
    if (t.is_trivial()) return q.unit();
    auto rec = [&](auto&& self, VertexId v) -> typename Q::Element {
        auto e = label(b.t.at[v]);
        const auto& slots = t.vertices[v].slots;
        for (std::size_t s = slots.size(); s >= 1; --s)
            if (!slots[s - 1].is_leaf()) e = q.compose(e, s, self(self, static_cast<VertexId>(slots[s - 1].value)));
        return e;
    };
    return relabel_planar(q, rec(rec, *t.root), t.leaf_labeling());
}

/// ξ(g) for a loop g at δ_*. Vertices at heights 0 and 1 are checked against δ_*.
template <EffectiveOperad Q, class E>
typename Q::Element xi_eval(const Q& q, const OperadMap<WPoint<E>, typename Q::Element>& delta_star,
                            const PathOfMaps<WPoint<E>, typename Q::Element>& g, const BPoint<E>& b) {
    return evaluate_vertexwise(q, b, [&](const BVertex<E>& v) {
        auto value = g(v.label, v.height);
        if ((v.height.is_zero() || v.height.is_one()) && !(value == delta_star(v.label)))
            throw std::domain_error("loop endpoint violated: g(y, " + v.height.str() + ") differs from " + delta_star.name);
        return value;
    });
}

/// ψ′(x, g): the pair (x, ψ′(g)(b)). Vertices at heights 0 and 1 are checked against δ_* and δₓ.
template <EffectiveOperad Q, class E>
std::pair<std::size_t, typename Q::Element> psi_prime_eval(const Q& q,
                                                            const PointedMapFamily<WPoint<E>, typename Q::Element>& delta,
                                                            const HofiberPoint<WPoint<E>, typename Q::Element>& h,
                                                            const BPoint<E>& b) {
    auto value = evaluate_vertexwise(q, b, [&](const BVertex<E>& v) {
        auto image = h.g(v.label, v.height);
        if (v.height.is_zero() && !(image == delta.base()(v.label)))
            throw std::domain_error("path start violated: g(y, 0) differs from " + delta.base().name);
        if (v.height.is_one() && !(image == delta(h.x)(v.label)))
            throw std::domain_error("path end violated: g(y, 1) differs from " + delta(h.x).name);
        return image;
    });
    return {h.x, std::move(value)};
}

/// ψ′(x, g) as a bimodule map B𝒫 → 𝒬ₓ.
template <EffectiveOperad Q, class E>
BimoduleMap<BPoint<E>, typename Q::Element> psi_prime(const Q& q,
                                                       const PointedMapFamily<WPoint<E>, typename Q::Element>& delta,
                                                       const HofiberPoint<WPoint<E>, typename Q::Element>& h) {
    return {"psi'(" + delta.set.names.at(h.x) + ", " + h.g.name + ")",
            [&q, &delta, h](const BPoint<E>& b) { return psi_prime_eval(q, delta, h, b).second; }};
}

/// ψ″(x, f) : p ↦ (f(p), x, …, x).
template <class BE, class QE>
BimoduleMap<BE, Tagged<QE>> psi_double_prime(std::size_t x, BimoduleMap<BE, QE> f,
                                             std::function<std::size_t(const QE&)> arity) {
    return {"psi''(" + f.name + ")", [x, f, arity](const BE& b) {
                auto value = f(b);
                const auto n = arity(value);
                return Tagged<QE>{std::move(value), std::vector<std::size_t>(n, x)};
            }};
}

template <SampleableOperad W, EffectiveOperad Q>
CheckReport check_operad_map(const W& w, const Q& q, const OperadMap<typename W::Element, typename Q::Element>& f,
                             std::size_t samples, unsigned long long seed, std::size_t max_arity = 3) {
    CheckReport rep;
    rep.subject = "operad map " + f.name + ": " + w.name() + " -> " + q.name();
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    auto s = [&](const typename W::Element& y) { return w.to_string(y); };
    for (std::size_t k = 0; k < samples; ++k) {
        const auto n = uniform(rng, 1, max_arity), m = uniform(rng, 1, max_arity);
        const auto x = w.sample(rng, n), y = w.sample(rng, m);
        const auto i = uniform(rng, 1, n);
        rep.record("unit", "f(1) = 1", f(w.unit()) == q.unit(), [] { return std::string("unit"); });
        rep.record("compose", "f(x ∘ᵢ y) = f(x) ∘ᵢ f(y)", f(w.compose(x, i, y)) == q.compose(f(x), i, f(y)),
                   [&] { return s(x) + " ; " + s(y) + " i=" + std::to_string(i); });
        const auto u = random_injection(rng, uniform(rng, 1, n), n);
        rep.record("lambda", "f(u*x) = u* f(x)", f(w.act(u, x)) == q.act(u, f(x)),
                   [&] { return s(x) + " u=" + u.str(); });
    }
    return rep;
}

/// The path conditions: unit, composition and Λ at every sampled time, and both endpoints.
template <SampleableOperad W, EffectiveOperad Q>
CheckReport check_path(const W& w, const Q& q, const PathOfMaps<typename W::Element, typename Q::Element>& g,
                       const OperadMap<typename W::Element, typename Q::Element>& start,
                       const OperadMap<typename W::Element, typename Q::Element>& end, std::size_t samples,
                       unsigned long long seed, std::size_t max_arity = 3) {
    CheckReport rep;
    rep.subject = "path " + g.name + " from " + start.name + " to " + end.name;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    std::vector<Rational> times{Rational(0), Rational(1)};
    times.insert(times.end(), g.breakpoints.begin(), g.breakpoints.end());
    auto s = [&](const typename W::Element& y) { return w.to_string(y); };
    for (std::size_t k = 0; k < samples; ++k) {
        const Rational t = k < times.size() ? times[k] : random_rational(rng, Rational(0), Rational(1), 12);
        const auto n = uniform(rng, 1, max_arity), m = uniform(rng, 1, max_arity);
        const auto x = w.sample(rng, n), y = w.sample(rng, m);
        const auto i = uniform(rng, 1, n);
        const auto at = [&] { return " t=" + t.str(); };
        rep.record("unit", "g(1, t) = 1'", g(w.unit(), t) == q.unit(), at);
        rep.record("compose", "g(x ∘ᵢ y, t) = g(x, t) ∘ᵢ g(y, t)",
                   g(w.compose(x, i, y), t) == q.compose(g(x, t), i, g(y, t)),
                   [&] { return s(x) + " ; " + s(y) + " i=" + std::to_string(i) + at(); });
        rep.record("start", "g(y, 0) = " + start.name + "(y)", g(x, Rational(0)) == start(x), [&] { return s(x); });
        rep.record("end", "g(y, 1) = " + end.name + "(y)", g(x, Rational(1)) == end(x), [&] { return s(x); });
        const auto u = random_injection(rng, uniform(rng, 1, n), n);
        rep.record("lambda", "g(u*y, t) = u* g(y, t)", g(w.act(u, x), t) == q.act(u, g(x, t)),
                   [&] { return s(x) + " u=" + u.str() + at(); });
    }
    return rep;
}

/// Checks that f commutes with the left action, the right actions and the Λ-action.
template <EffectiveOperad P, class M>
CheckReport check_bimodule_map(const BModule<P>& b, const M& m,
                               const BimoduleMap<typename BModule<P>::Element, typename M::Element>& f,
                               std::size_t samples, unsigned long long seed, std::size_t max_arity = 3)
    requires SampleableOperad<P>
{
    CheckReport rep;
    rep.subject = "bimodule map " + f.name + ": " + b.name() + " -> " + m.name();
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    const auto& w = b.w();
    auto s = [&](const typename BModule<P>::Element& x) { return b.to_string(x); };
    for (std::size_t k = 0; k < samples; ++k) {
        const auto n = uniform(rng, 1, max_arity);
        const auto x = b.sample(rng, n);
        const auto p = w.sample(rng, uniform(rng, 1, max_arity));
        const auto i = uniform(rng, 1, n);
        rep.record("arity", "|f(b)| = |b|", m.arity(f(x)) == n, [&] { return s(x); });
        rep.record("right", "f(b ∘ⁱ p) = f(b) ∘ⁱ p", f(b.right(x, i, p)) == m.right(f(x), i, p),
                   [&] { return s(x) + " ; " + w.to_string(p) + " i=" + std::to_string(i); });
        std::vector<typename BModule<P>::Element> bs;
        std::vector<typename M::Element> images;
        for (std::size_t j = 0; j < p.arity(); ++j) {
            bs.push_back(b.sample(rng, uniform(rng, 1, max_arity)));
            images.push_back(f(bs.back()));
        }
        rep.record("left", "f(p(b₁…)) = p(f(b₁)…)", f(b.left(p, bs)) == m.left(p, images),
                   [&] { return w.to_string(p); });
        const auto u = random_injection(rng, uniform(rng, 1, n), n);
        rep.record("lambda", "f(u*b) = u* f(b)", f(b.act(u, x)) == m.act(u, f(x)), [&] { return s(x) + " u=" + u.str(); });
        rep.record("unit", "f(ι) is defined", m.arity(f(b.unit())) == 1, [] { return std::string("iota"); });
    }
    return rep;
}

/// Path lifting: cut at height c = 1 - t/2 (vertices at exactly c stay below), evaluate the
/// rescaled lower part with f₀(x), each upper part through δ_{g(x, 2s+t-2)} vertex-wise, and
/// compose the upper parts onto the lower result. Returns the pair (g(x, t), value).
template <EffectiveOperad P, EffectiveOperad Q, class Param, class F0, class G>
std::pair<std::size_t, typename Q::Element> lift_path(const BModule<P>& bm, const Q& q,
                                                       const PointedMapFamily<WPoint<typename P::Element>,
                                                                              typename Q::Element>& delta,
                                                       F0&& f0, G&& g, const Param& x, const Rational& t,
                                                       const BPoint<typename P::Element>& b) {
    using E = typename P::Element;
    using QE = typename Q::Element;
    if (t < Rational(0) || t > Rational(1)) throw std::domain_error("lift time " + t.str() + " outside [0,1]");
    const Rational cut = Rational(1) - t / Rational(2);
    const auto& tree = b.t.tree;
    const std::size_t tag = g(x, t);
    if (tree.is_trivial()) return {tag, f0(x, b)};

    auto upper_value = [&](auto&& self, VertexId v) -> QE {
        const auto& bv = b.t.at[v];
        const std::size_t point = g(x, Rational(2) * bv.height + t - Rational(2));
        QE e = delta(point)(bv.label);
        const auto& slots = tree.vertices[v].slots;
        for (std::size_t s = slots.size(); s >= 1; --s)
            if (!slots[s - 1].is_leaf()) e = q.compose(e, s, self(self, static_cast<VertexId>(slots[s - 1].value)));
        return e;
    };

    typename BModule<P>::Raw lower;
    std::vector<std::optional<VertexId>> uppers;  // per planar leaf of the lower part
    auto walk = [&](auto&& self, VertexId v) -> VertexId {
        const auto id = lower.add_vertex({}, BVertex<E>{b.t.at[v].label, b.t.at[v].height / cut});
        std::vector<Slot> slots;
        for (const auto& s : tree.vertices[v].slots) {
            if (s.is_leaf()) {
                uppers.push_back(std::nullopt);
                slots.push_back(Slot::leaf(uppers.size()));
            } else if (b.t.at[s.value].height > cut) {
                uppers.push_back(static_cast<VertexId>(s.value));
                slots.push_back(Slot::leaf(uppers.size()));
            } else {
                slots.push_back(Slot::edge(self(self, static_cast<VertexId>(s.value))));
            }
        }
        lower.tree.vertices[id].slots = std::move(slots);
        return id;
    };
    const auto root = *tree.root;
    if (b.t.at[root].height > cut)
        uppers.push_back(root);
    else
        lower.tree.root = walk(walk, root);

    QE value = f0(x, bm.normalize(std::move(lower)));
    for (std::size_t k = uppers.size(); k >= 1; --k)
        if (uppers[k - 1]) value = q.compose(value, k, upper_value(upper_value, *uppers[k - 1]));
    return {tag, relabel_planar(q, std::move(value), tree.leaf_labeling())};
}

}  // namespace opcalc
