#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace opcalc {

/// Morphism of the category Λ: an injection u : {1..m} -> {1..n}.
/// Acting contravariantly, u* keeps input u(j) of an arity-n element as new input j.
class InjectiveMap {
public:
    InjectiveMap() = default;
    /// values[j-1] = u(j), 1-based. Throws std::domain_error if not injective or out of range.
    InjectiveMap(std::vector<std::size_t> values, std::size_t codomain);

    static InjectiveMap identity(std::size_t n);
    /// The order-preserving injection whose image is `image` (sorted ascending internally).
    static InjectiveMap from_image(std::vector<std::size_t> image, std::size_t codomain);
    /// Bijection given by a word: u(j) = word[j-1].
    static InjectiveMap permutation(std::vector<std::size_t> word);

    std::size_t domain() const { return values_.size(); }
    std::size_t codomain() const { return codomain_; }
    std::size_t operator()(std::size_t j) const { return values_.at(j - 1); }
    const std::vector<std::size_t>& values() const { return values_; }

    bool order_preserving() const;
    bool is_bijection() const { return domain() == codomain_; }
    bool is_identity() const;

    /// Preimage of k (1-based), or 0 if k is not in the image.
    std::size_t preimage(std::size_t k) const;

    /// (*this ∘ v)(j) = u(v(j)); requires v.codomain() == domain().
    InjectiveMap after(const InjectiveMap& v) const;
    InjectiveMap inverse() const;  // bijections only

    /// Factorization u = mono ∘ perm with mono order-preserving and perm a bijection of the domain.
    std::pair<InjectiveMap, InjectiveMap> factor() const;

    std::string str() const;

    friend bool operator==(const InjectiveMap&, const InjectiveMap&) = default;
    friend auto operator<=>(const InjectiveMap&, const InjectiveMap&) = default;

private:
    std::vector<std::size_t> values_;
    std::size_t codomain_ = 0;
};

/// All injections [m] -> [n] (n!/(n-m)! of them), in lexicographic order of value words.
std::vector<InjectiveMap> all_injections(std::size_t m, std::size_t n);
/// All order-preserving injections [m] -> [n].
std::vector<InjectiveMap> all_order_preserving(std::size_t m, std::size_t n);

}  // namespace opcalc
