#include "opcalc/random.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace opcalc {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long den) {
    const Rational a = lo * Rational(den), b = hi * Rational(den);
    // integer range inside [a, b]
    const long from = a.ceil();
    const long to = b.floor();
    if (from > to) return lo;
    return Rational(std::uniform_int_distribution<long>(from, to)(rng), den);
}

InjectiveMap random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), std::size_t{1});
    std::shuffle(w.begin(), w.end(), rng);
    return InjectiveMap::permutation(std::move(w));
}

InjectiveMap random_injection(Rng& rng, std::size_t m, std::size_t n) {
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), std::size_t{1});
    std::shuffle(w.begin(), w.end(), rng);
    w.resize(m);
    return {std::move(w), n};
}

namespace {

// Splits n into k positive parts.
std::vector<std::size_t> composition(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), std::size_t{1});
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> parts;
    std::size_t prev = 0;
    for (auto c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(n - prev);
    return parts;
}

}  // namespace

Tree random_tree(Rng& rng, std::size_t n, std::size_t max_arity, double unary_p, std::size_t max_depth) {
    Tree t;
    std::size_t next_leaf = 1;
    // returns the slot for a subtree with `leaves` leaves
    auto build = [&](auto&& self, std::size_t leaves, std::size_t depth, bool must_vertex) -> Slot {
        if (leaves == 1 && !must_vertex && (depth >= max_depth || !coin(rng, unary_p))) return Slot::leaf(next_leaf++);
        std::size_t k;
        if (leaves == 1 || depth >= max_depth) {
            k = leaves == 1 ? 1 : std::min(leaves, max_arity);
            if (depth >= max_depth && leaves > max_arity) k = leaves;  // flat corolla at the depth bound
        } else if (coin(rng, unary_p)) {
            k = 1;
        } else {
            k = uniform(rng, std::min<std::size_t>(2, leaves), std::min(leaves, max_arity));
        }
        const auto id = static_cast<VertexId>(t.vertices.size());
        t.vertices.emplace_back();
        std::vector<Slot> slots;
        for (auto part : composition(rng, leaves, k)) slots.push_back(self(self, part, depth + 1, false));
        t.vertices[id].slots = std::move(slots);
        return Slot::edge(id);
    };
    t.root = 0;
    build(build, n, 0, true);
    return t;
}

Tree random_labelled_tree(Rng& rng, std::size_t n, std::size_t max_arity, double unary_p, std::size_t max_depth) {
    auto t = random_tree(rng, n, max_arity, unary_p, max_depth);
    return relabel_leaves(t, random_permutation(rng, n));
}

}  // namespace opcalc
