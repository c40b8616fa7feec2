#pragma once

#include "opcalc/operad.hpp"

#include <string>
#include <vector>

namespace opcalc {

/// Linear order of the inputs: word[k] is the input read in position k.
struct Ordering {
    std::vector<std::size_t> word;

    friend bool operator==(const Ordering&, const Ordering&) = default;
    friend auto operator<=>(const Ordering&, const Ordering&) = default;
};

/// The associative operad: carrier Σₙ, composition by block substitution.
class Associative {
public:
    using Element = Ordering;

    std::string name() const { return "assoc"; }
    std::size_t arity(const Element& x) const { return x.word.size(); }
    Element unit() const { return {{1}}; }
    Element identity(std::size_t n) const;
    Element compose(const Element& x, std::size_t i, const Element& y) const;
    Element act(const InjectiveMap& u, const Element& x) const;

    std::string to_string(const Element& x) const;
    /// "<2,1,3>"
    Element parse(const std::string& text) const;
    Element sample(Rng& rng, std::size_t n) const;
};

}  // namespace opcalc
