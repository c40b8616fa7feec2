#include "opcalc/operad.hpp"

namespace opcalc {

InjectiveMap block_permutation(const InjectiveMap& sigma, std::size_t i, std::size_t m) {
    const std::size_t n = sigma.domain();
    const std::size_t target = sigma(i);
    auto outer = [&](std::size_t old) { return old < target ? old : old + m - 1; };
    std::vector<std::size_t> word;
    word.reserve(n + m - 1);
    for (std::size_t p = 1; p <= n + m - 1; ++p) {
        if (p < i)
            word.push_back(outer(sigma(p)));
        else if (p < i + m)
            word.push_back(target + (p - i));
        else
            word.push_back(outer(sigma(p - m + 1)));
    }
    return InjectiveMap::permutation(std::move(word));
}

InjectiveMap inner_block_permutation(std::size_t n, std::size_t i, const InjectiveMap& rho) {
    const std::size_t m = rho.domain();
    std::vector<std::size_t> word;
    word.reserve(n + m - 1);
    for (std::size_t p = 1; p <= n + m - 1; ++p) {
        if (p >= i && p < i + m)
            word.push_back(i - 1 + rho(p - i + 1));
        else
            word.push_back(p);
    }
    return InjectiveMap::permutation(std::move(word));
}

}  // namespace opcalc
