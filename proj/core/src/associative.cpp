#include "opcalc/operads/associative.hpp"

#include "opcalc/text_util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opcalc {

Ordering Associative::identity(std::size_t n) const {
    Ordering o;
    o.word.resize(n);
    std::iota(o.word.begin(), o.word.end(), std::size_t{1});
    return o;
}

Ordering Associative::compose(const Element& x, std::size_t i, const Element& y) const {
    require_input(i, x.word.size(), "assoc compose");
    const std::size_t m = y.word.size();
    Ordering out;
    for (auto letter : x.word) {
        if (letter == i) {
            for (auto l : y.word) out.word.push_back(l + i - 1);
        } else {
            out.word.push_back(letter > i ? letter + m - 1 : letter);
        }
    }
    return out;
}

Ordering Associative::act(const InjectiveMap& u, const Element& x) const {
    require_arity(u.codomain(), x.word.size(), "assoc lambda action");
    Ordering out;
    for (auto letter : x.word)
        if (auto j = u.preimage(letter)) out.word.push_back(j);
    return out;
}

std::string Associative::to_string(const Element& x) const {
    std::vector<std::string> parts;
    for (auto l : x.word) parts.push_back(std::to_string(l));
    return "<" + join(parts, ",") + ">";
}

Ordering Associative::parse(const std::string& text) const {
    Ordering out;
    for (const auto& p : split(strip_brackets(text, '<', '>'), ',')) out.word.push_back(std::stoul(p));
    InjectiveMap::permutation(out.word);  // validates
    return out;
}

Ordering Associative::sample(Rng& rng, std::size_t n) const {
    auto o = identity(n);
    std::shuffle(o.word.begin(), o.word.end(), rng);
    return o;
}

}  // namespace opcalc
