#include "opcalc/injective_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace opcalc {

InjectiveMap::InjectiveMap(std::vector<std::size_t> values, std::size_t codomain)
    : values_(std::move(values)), codomain_(codomain) {
    std::vector<bool> seen(codomain_ + 1, false);
    for (auto v : values_) {
        if (v < 1 || v > codomain_)
            throw std::domain_error("injective map value " + std::to_string(v) + " outside [1," +
                                    std::to_string(codomain_) + "]");
        if (seen[v]) throw std::domain_error("map is not injective: value " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
}

InjectiveMap InjectiveMap::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return {std::move(v), n};
}

InjectiveMap InjectiveMap::from_image(std::vector<std::size_t> image, std::size_t codomain) {
    std::sort(image.begin(), image.end());
    return {std::move(image), codomain};
}

InjectiveMap InjectiveMap::permutation(std::vector<std::size_t> word) {
    const auto n = word.size();
    return {std::move(word), n};
}

bool InjectiveMap::order_preserving() const {
    return std::is_sorted(values_.begin(), values_.end()) &&
           std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool InjectiveMap::is_identity() const {
    if (domain() != codomain_) return false;
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (values_[j] != j + 1) return false;
    return true;
}

std::size_t InjectiveMap::preimage(std::size_t k) const {
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (values_[j] == k) return j + 1;
    return 0;
}

InjectiveMap InjectiveMap::after(const InjectiveMap& v) const {
    if (v.codomain() != domain()) throw std::domain_error("injective maps are not composable");
    std::vector<std::size_t> out(v.domain());
    for (std::size_t j = 1; j <= v.domain(); ++j) out[j - 1] = (*this)(v(j));
    return {std::move(out), codomain_};
}

InjectiveMap InjectiveMap::inverse() const {
    if (!is_bijection()) throw std::domain_error("inverse of a non-bijective injection");
    std::vector<std::size_t> out(codomain_);
    for (std::size_t j = 1; j <= domain(); ++j) out[(*this)(j) - 1] = j;
    return {std::move(out), codomain_};
}

std::pair<InjectiveMap, InjectiveMap> InjectiveMap::factor() const {
    auto mono = from_image(values_, codomain_);
    // perm(j) = position of u(j) inside the sorted image
    std::vector<std::size_t> perm(domain());
    for (std::size_t j = 0; j < domain(); ++j) perm[j] = mono.preimage(values_[j]);
    return {mono, permutation(std::move(perm))};
}

std::string InjectiveMap::str() const {
    std::string s = "[";
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(values_[j]);
    }
    return s + "]->" + std::to_string(codomain_);
}

std::vector<InjectiveMap> all_injections(std::size_t m, std::size_t n) {
    std::vector<InjectiveMap> out;
    std::vector<std::size_t> cur;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&] {
        if (cur.size() == m) {
            out.emplace_back(cur, n);
            return;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            cur.push_back(v);
            rec();
            cur.pop_back();
            used[v] = false;
        }
    };
    if (m <= n) rec();
    return out;
}

std::vector<InjectiveMap> all_order_preserving(std::size_t m, std::size_t n) {
    std::vector<InjectiveMap> out;
    for (auto& u : all_injections(m, n))
        if (u.order_preserving()) out.push_back(u);
    return out;
}

}  // namespace opcalc
