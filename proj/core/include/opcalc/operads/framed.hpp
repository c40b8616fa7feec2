#pragma once

#include "opcalc/operad.hpp"
#include "opcalc/operads/little_intervals.hpp"
#include "opcalc/text_util.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcalc {

/// Z/2 acting on 𝒟₁ by the reflection t ↦ 1 - t. Elements are 0 (identity) and 1 (reflection).
template <class Base>
struct Z2Reflection {
    using Group = std::uint8_t;
    static Group identity() { return 0; }
    static Group multiply(Group a, Group b) { return static_cast<Group>(a ^ b); }
    static typename Base::Element act(const Base& base, Group g, const typename Base::Element& x) {
        return g ? base.reflect(x) : x;
    }
    static std::string to_string(Group g) { return g ? "r" : "e"; }
    static Group parse(const std::string& s) {
        if (s == "e") return 0;
        if (s == "r") return 1;
        throw std::invalid_argument("unknown Z/2 element '" + s + "'");
    }
    static Group sample(Rng& rng) { return static_cast<Group>(rng() & 1U); }
};

template <class BaseElement, class Group>
struct FramedElement {
    BaseElement base;
    std::vector<Group> frame;

    friend bool operator==(const FramedElement&, const FramedElement&) = default;
    friend auto operator<=>(const FramedElement&, const FramedElement&) = default;
};

/// The framed operad 𝒪∘G for a group G acting on 𝒪 compatibly with Λ and ∘ᵢ:
/// (θ; g) ∘ᵢ (θ'; g') = (θ ∘ᵢ (gᵢ·θ'); g₁,…,g_{i−1}, gᵢg'₁,…,gᵢg'ₘ, g_{i+1},…,gₙ).
template <EffectiveOperad Base, class Action>
class FramedOperad {
public:
    using Group = typename Action::Group;
    using Element = FramedElement<typename Base::Element, Group>;

    explicit FramedOperad(Base base = {}) : base_(std::move(base)) {}

    const Base& base() const { return base_; }
    std::string name() const { return base_.name() + "z2"; }
    std::size_t arity(const Element& x) const { return base_.arity(x.base); }
    Element unit() const { return {base_.unit(), {Action::identity()}}; }

    Element compose(const Element& x, std::size_t i, const Element& y) const {
        require_input(i, arity(x), "framed compose");
        const Group gi = x.frame[i - 1];
        Element out{base_.compose(x.base, i, Action::act(base_, gi, y.base)), {}};
        out.frame.insert(out.frame.end(), x.frame.begin(), x.frame.begin() + static_cast<long>(i - 1));
        for (auto g : y.frame) out.frame.push_back(Action::multiply(gi, g));
        out.frame.insert(out.frame.end(), x.frame.begin() + static_cast<long>(i), x.frame.end());
        return out;
    }

    Element act(const InjectiveMap& u, const Element& x) const {
        Element out{base_.act(u, x.base), {}};
        for (std::size_t j = 1; j <= u.domain(); ++j) out.frame.push_back(x.frame[u(j) - 1]);
        return out;
    }

    std::string to_string(const Element& x) const {
        std::vector<std::string> gs;
        for (auto g : x.frame) gs.push_back(Action::to_string(g));
        return base_.to_string(x.base) + "@" + join(gs, ",");
    }

    /// "<base>@g1,g2,..."
    Element parse(const std::string& text) const {
        const auto at = text.rfind('@');
        if (at == std::string::npos) throw std::invalid_argument("framed element needs '@frames'");
        Element out{base_.parse(text.substr(0, at)), {}};
        for (const auto& g : split(text.substr(at + 1), ',')) out.frame.push_back(Action::parse(g));
        if (out.frame.size() != arity(out)) throw std::invalid_argument("frame count differs from arity");
        return out;
    }

    Element sample(Rng& rng, std::size_t n) const {
        Element out{base_.sample(rng, n), {}};
        for (std::size_t k = 0; k < n; ++k) out.frame.push_back(Action::sample(rng));
        return out;
    }

private:
    Base base_;
};

/// 𝒟₁∘Z/2 with Z/2 acting by reflection.
using FramedIntervals = FramedOperad<LittleIntervals, Z2Reflection<LittleIntervals>>;

}  // namespace opcalc
