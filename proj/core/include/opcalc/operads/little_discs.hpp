#pragma once

#include "opcalc/operad.hpp"
#include "opcalc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace opcalc {

/// Round disc with rational centre and radius; as an embedding of the unit disc, z ↦ centre + r z.
struct Disc {
    Rational x, y, r;

    Disc then(const Disc& inner) const { return {x + r * inner.x, y + r * inner.y, r * inner.r}; }

    friend bool operator==(const Disc&, const Disc&) = default;
    friend std::strong_ordering operator<=>(const Disc&, const Disc&) = default;
};

struct DiscConfig {
    std::vector<Disc> discs;

    std::size_t arity() const { return discs.size(); }
    /// Containment and disjointness are decided with squared distances only.
    void validate() const;

    friend bool operator==(const DiscConfig&, const DiscConfig&) = default;
    friend std::strong_ordering operator<=>(const DiscConfig&, const DiscConfig&) = default;
};

/// The little 2-discs operad 𝒟₂ with rational centres and radii in the unit disc.
class LittleDiscs {
public:
    using Element = DiscConfig;

    std::string name() const { return "d2"; }
    std::size_t arity(const Element& x) const { return x.arity(); }
    Element unit() const { return {{{Rational(0), Rational(0), Rational(1)}}}; }
    Element compose(const Element& x, std::size_t i, const Element& y) const;
    Element act(const InjectiveMap& u, const Element& x) const;

    std::string to_string(const Element& x) const;
    /// "[x,y,r;x,y,r]"
    Element parse(const std::string& text) const;
    Element sample(Rng& rng, std::size_t n) const;
};

/// Rotation by a quarter turn, (x, y) ↦ (-y, x), applied to every centre. An operad automorphism.
inline DiscConfig rotate_quarter(const DiscConfig& x) {
    DiscConfig out;
    for (const auto& d : x.discs) out.discs.push_back({-d.y, d.x, d.r});
    return out;
}

}  // namespace opcalc
