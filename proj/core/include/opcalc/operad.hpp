#pragma once

#include "opcalc/injective_map.hpp"

#include <concepts>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcalc {

using Rng = std::mt19937_64;

/// An effective reduced operad: decidable (totally ordered) elements, unit, partial
/// compositions and the Λ-action u* (bijections give the Σ-action).
///
/// Conventions: `compose(x, i, y)` places y's inputs at positions i..i+m-1;
/// `act(u, x)` for u : [m] -> [n] keeps input u(j) of x as input j.
template <class O>
concept EffectiveOperad = requires(const O& op, const typename O::Element& x, std::size_t i,
                                   const InjectiveMap& u) {
    typename O::Element;
    requires std::totally_ordered<typename O::Element>;
    { op.name() } -> std::convertible_to<std::string>;
    { op.arity(x) } -> std::convertible_to<std::size_t>;
    { op.unit() } -> std::same_as<typename O::Element>;
    { op.compose(x, i, x) } -> std::same_as<typename O::Element>;
    { op.act(u, x) } -> std::same_as<typename O::Element>;
    { op.to_string(x) } -> std::convertible_to<std::string>;
};

/// Operads that can draw random elements of a given arity for the property suites.
template <class O>
concept SampleableOperad = EffectiveOperad<O> && requires(const O& op, Rng& rng, std::size_t n) {
    { op.sample(rng, n) } -> std::same_as<typename O::Element>;
};

template <class O>
concept ParseableOperad = EffectiveOperad<O> && requires(const O& op, const std::string& s) {
    { op.parse(s) } -> std::same_as<typename O::Element>;
};

inline void require_arity(std::size_t got, std::size_t want, const char* what) {
    if (got != want)
        throw std::domain_error(std::string(what) + ": arity " + std::to_string(got) + ", expected " +
                                std::to_string(want));
}

inline void require_input(std::size_t i, std::size_t n, const char* what) {
    if (i < 1 || i > n)
        throw std::domain_error(std::string(what) + ": input " + std::to_string(i) + " outside [1," +
                                std::to_string(n) + "]");
}

/// Full composition x(y_1, ..., y_n) = (...(x ∘_n y_n)...) ∘_1 y_1.
template <EffectiveOperad O>
typename O::Element gamma(const O& op, typename O::Element x, const std::vector<typename O::Element>& ys) {
    require_arity(ys.size(), op.arity(x), "gamma");
    for (std::size_t i = ys.size(); i >= 1; --i) x = op.compose(x, i, ys[i - 1]);
    return x;
}

/// The block permutation of arity n+m-1 relating (σ* x) ∘_i y to x ∘_{σ(i)} y:
/// (σ* x) ∘_i y = block(σ, i, m)* (x ∘_{σ(i)} y).
InjectiveMap block_permutation(const InjectiveMap& sigma, std::size_t i, std::size_t m);

/// Permutation of arity n+m-1 relating x ∘_i (ρ* y) to x ∘_i y.
InjectiveMap inner_block_permutation(std::size_t n, std::size_t i, const InjectiveMap& rho);

/// An operad seen as a bimodule over itself: left action is full composition, right action ∘ᵢ.
template <EffectiveOperad O>
class SelfBimodule {
public:
    using Element = typename O::Element;

    explicit SelfBimodule(const O& op) : op_(&op) {}

    std::string name() const { return op_->name(); }
    std::size_t arity(const Element& x) const { return op_->arity(x); }
    Element left(const Element& p, const std::vector<Element>& xs) const { return gamma(*op_, p, xs); }
    Element right(const Element& x, std::size_t i, const Element& p) const { return op_->compose(x, i, p); }
    Element act(const InjectiveMap& u, const Element& x) const { return op_->act(u, x); }
    std::string to_string(const Element& x) const { return op_->to_string(x); }
    Element sample(Rng& rng, std::size_t n) const
        requires SampleableOperad<O>
    {
        return op_->sample(rng, n);
    }

private:
    const O* op_;
};

}  // namespace opcalc
