#pragma once

#include "opcalc/injective_map.hpp"
#include "opcalc/operad.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/tree.hpp"

#include <cstddef>
#include <vector>

namespace opcalc {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

/// p/den with p uniform in [lo*den, hi*den].
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long den = 12);

InjectiveMap random_permutation(Rng& rng, std::size_t n);
InjectiveMap random_injection(Rng& rng, std::size_t m, std::size_t n);

/// Random planar tree with n leaves labelled planarly, vertex arities in [1, max_arity].
/// Unary vertices appear with probability unary_p per vertex; depth is bounded by max_depth.
Tree random_tree(Rng& rng, std::size_t n, std::size_t max_arity = 3, double unary_p = 0.1,
                 std::size_t max_depth = 4);

/// Random tree with a random leaf labelling.
Tree random_labelled_tree(Rng& rng, std::size_t n, std::size_t max_arity = 3, double unary_p = 0.1,
                          std::size_t max_depth = 4);

}  // namespace opcalc
