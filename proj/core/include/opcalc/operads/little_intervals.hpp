#pragma once

#include "opcalc/operad.hpp"
#include "opcalc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace opcalc {

/// Affine embedding [0,1] -> [0,1], t ↦ lo + (hi - lo) t.
struct Interval {
    Rational lo, hi;

    Rational at(const Rational& t) const { return lo + (hi - lo) * t; }
    /// Inverse affine map; defined on all rationals.
    Rational inverse(const Rational& s) const { return (s - lo) / (hi - lo); }
    Interval then(const Interval& inner) const { return {at(inner.lo), at(inner.hi)}; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend std::strong_ordering operator<=>(const Interval&, const Interval&) = default;
};

/// A point of the little intervals operad: n intervals with disjoint interiors inside [0,1].
struct IntervalConfig {
    std::vector<Interval> intervals;

    std::size_t arity() const { return intervals.size(); }
    /// Throws std::domain_error naming the violated condition.
    void validate() const;

    friend bool operator==(const IntervalConfig&, const IntervalConfig&) = default;
    friend std::strong_ordering operator<=>(const IntervalConfig&, const IntervalConfig&) = default;
};

/// The little intervals operad 𝒟₁ with exact rational endpoints.
class LittleIntervals {
public:
    using Element = IntervalConfig;

    std::string name() const { return "d1"; }
    std::size_t arity(const Element& x) const { return x.arity(); }
    Element unit() const { return {{{Rational(0), Rational(1)}}}; }
    Element compose(const Element& x, std::size_t i, const Element& y) const;
    Element act(const InjectiveMap& u, const Element& x) const;
    /// Reflection t ↦ 1 - t applied to every interval (the Z/2-action).
    Element reflect(const Element& x) const;

    std::string to_string(const Element& x) const;
    /// "[0,1/3;2/3,1]"
    Element parse(const std::string& text) const;
    Element sample(Rng& rng, std::size_t n) const;
};

/// The reflection t ↦ 1 - t applied to every interval; inputs keep their labels. An operad automorphism.
inline IntervalConfig mirror(const IntervalConfig& x) {
    IntervalConfig out;
    for (const auto& iv : x.intervals) out.intervals.push_back({Rational(1) - iv.hi, Rational(1) - iv.lo});
    return out;
}

}  // namespace opcalc
