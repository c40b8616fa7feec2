#pragma once

#include "opcalc/check_report.hpp"
#include "opcalc/operad.hpp"
#include "opcalc/random.hpp"

#include <string>
#include <vector>

namespace opcalc {

/// Splits an order-preserving u : [k] -> [n+m-1] along the block i..i+m-1 of x ∘ᵢ y.
/// Returns (vx, vy, i') with u*(x ∘ᵢ y) = (vx* x) ∘_{i'} (vy* y), or vx* x when the block is missed
/// (then vy has domain 0 and i' = 0).
struct BlockSplit {
    InjectiveMap vx;
    std::vector<std::size_t> y_image;
    std::size_t i_prime = 0;
};

inline BlockSplit split_along_block(const InjectiveMap& u, std::size_t n, std::size_t i, std::size_t m) {
    std::vector<std::size_t> xi, yi;
    bool hit = false;
    for (auto s : u.values()) {
        if (s < i) {
            xi.push_back(s);
        } else if (s < i + m) {
            yi.push_back(s - i + 1);
            if (!hit) xi.push_back(i);
            hit = true;
        } else {
            xi.push_back(s - m + 1);
        }
    }
    BlockSplit out{InjectiveMap::from_image(xi, n), yi, 0};
    if (hit) out.i_prime = out.vx.preimage(i);
    return out;
}

/// Randomized check of the reduced-operad laws: units, both associativity patterns,
/// Σ-equivariance in both arguments, Λ-functoriality and Λ-compatibility of ∘ᵢ.
template <SampleableOperad O>
CheckReport check_operad_axioms(const O& op, std::size_t samples, unsigned long long seed, std::size_t max_arity = 3) {
    CheckReport rep;
    rep.subject = "operad axioms: " + op.name();
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    using E = typename O::Element;
    auto s = [&](const E& e) { return op.to_string(e); };

    for (std::size_t k = 0; k < samples; ++k) {
        const std::size_t n = uniform(rng, 1, max_arity), m = uniform(rng, 1, max_arity),
                          l = uniform(rng, 1, max_arity);
        const E x = op.sample(rng, n), y = op.sample(rng, m), z = op.sample(rng, l);
        const std::size_t i = uniform(rng, 1, n);

        rep.record("unit-right", "x ∘ᵢ 1 = x", op.compose(x, i, op.unit()) == x,
                   [&] { return s(x) + " at " + std::to_string(i); });
        rep.record("unit-left", "1 ∘₁ x = x", op.compose(op.unit(), 1, x) == x, [&] { return s(x); });

        {
            const std::size_t j = uniform(rng, 1, m);
            const E lhs = op.compose(op.compose(x, i, y), i + j - 1, z);
            const E rhs = op.compose(x, i, op.compose(y, j, z));
            rep.record("assoc-sequential", "(x ∘ᵢ y) ∘_{i+j-1} z = x ∘ᵢ (y ∘ⱼ z)", lhs == rhs,
                       [&] { return s(x) + " ; " + s(y) + " ; " + s(z) + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
        }
        if (n >= 2) {
            std::size_t a = uniform(rng, 1, n), b = uniform(rng, 1, n);
            while (a == b) b = uniform(rng, 1, n);
            if (a > b) std::swap(a, b);
            const E lhs = op.compose(op.compose(x, a, y), b + m - 1, z);
            const E rhs = op.compose(op.compose(x, b, z), a, y);
            rep.record("assoc-parallel", "(x ∘ₐ y) ∘_{b+m-1} z = (x ∘_b z) ∘ₐ y for a < b", lhs == rhs,
                       [&] { return s(x) + " ; " + s(y) + " ; " + s(z) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
        }
        {
            const auto sigma = random_permutation(rng, n);
            const E lhs = op.compose(op.act(sigma, x), i, y);
            const E rhs = op.act(block_permutation(sigma, i, m), op.compose(x, sigma(i), y));
            rep.record("sigma-outer", "(σ*x) ∘ᵢ y = block(σ)*(x ∘_{σ(i)} y)", lhs == rhs,
                       [&] { return s(x) + " ; " + s(y) + " σ=" + sigma.str() + " i=" + std::to_string(i); });
            const auto rho = random_permutation(rng, m);
            const E lhs2 = op.compose(x, i, op.act(rho, y));
            const E rhs2 = op.act(inner_block_permutation(n, i, rho), op.compose(x, i, y));
            rep.record("sigma-inner", "x ∘ᵢ (ρ*y) = (1 ∘ᵢ ρ)*(x ∘ᵢ y)", lhs2 == rhs2,
                       [&] { return s(x) + " ; " + s(y) + " ρ=" + rho.str() + " i=" + std::to_string(i); });
        }
        {
            const std::size_t a = uniform(rng, 1, n), b = uniform(rng, 1, a);
            const auto u = random_injection(rng, a, n);
            const auto v = random_injection(rng, b, a);
            rep.record("lambda-functor", "(u∘v)* = v* u*", op.act(u.after(v), x) == op.act(v, op.act(u, x)),
                       [&] { return s(x) + " u=" + u.str() + " v=" + v.str(); });
            rep.record("lambda-identity", "id* = id", op.act(InjectiveMap::identity(n), x) == x, [&] { return s(x); });
        }
        {
            const std::size_t total = n + m - 1;
            const std::size_t kk = uniform(rng, 1, total);
            const auto u = random_injection(rng, kk, total).factor().first;  // order-preserving part
            const auto split = split_along_block(u, n, i, m);
            const E lhs = op.act(u, op.compose(x, i, y));
            E rhs = op.act(split.vx, x);
            if (split.i_prime != 0)
                rhs = op.compose(rhs, split.i_prime, op.act(InjectiveMap::from_image(split.y_image, m), y));
            rep.record("lambda-compose", "u*(x ∘ᵢ y) = (u₁*x) ∘_{i'} (u₂*y)", lhs == rhs,
                       [&] { return s(x) + " ; " + s(y) + " u=" + u.str() + " i=" + std::to_string(i); });
        }
    }
    return rep;
}

/// τ with left(σ*p, bs) = τ*left(p, bs') where bs' lists bs in the order of p's inputs.
inline InjectiveMap multi_block_permutation(const InjectiveMap& sigma, const std::vector<std::size_t>& arities) {
    const std::size_t n = arities.size();
    std::vector<std::size_t> permuted(n), offset_r(n + 1, 0);
    for (std::size_t j = 1; j <= n; ++j) permuted[sigma(j) - 1] = arities[j - 1];
    for (std::size_t k = 0; k < n; ++k) offset_r[k + 1] = offset_r[k] + permuted[k];
    std::vector<std::size_t> word;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t t = 1; t <= arities[j - 1]; ++t) word.push_back(offset_r[sigma(j) - 1] + t);
    return InjectiveMap(word, offset_r[n]);
}

/// Randomized check of the laws of an O-bimodule M: units, associativity of both actions, their
/// compatibility, Σ-equivariance of the left action and Λ-compatibility of both actions.
template <SampleableOperad O, class M>
CheckReport check_bimodule_axioms(const O& op, const M& mod, std::size_t samples, unsigned long long seed,
                                  std::size_t max_arity = 3) {
    CheckReport rep;
    rep.subject = "bimodule axioms: " + mod.name() + " over " + op.name();
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    using P = typename O::Element;
    using B = typename M::Element;
    auto s = [&](const B& b) { return mod.to_string(b); };
    auto sp = [&](const P& p) { return op.to_string(p); };
    auto draw = [&](std::size_t count) {
        std::vector<B> bs;
        for (std::size_t j = 0; j < count; ++j) bs.push_back(mod.sample(rng, uniform(rng, 1, max_arity)));
        return bs;
    };

    for (std::size_t k = 0; k < samples; ++k) {
        const std::size_t n = uniform(rng, 1, max_arity), m = uniform(rng, 1, max_arity);
        const B b = mod.sample(rng, n);
        const P p = op.sample(rng, m), q = op.sample(rng, uniform(rng, 1, max_arity));
        const std::size_t i = uniform(rng, 1, n);

        rep.record("right-unit", "b ∘ⁱ 1 = b", mod.right(b, i, op.unit()) == b, [&] { return s(b); });
        rep.record("left-unit", "1(b) = b", mod.left(op.unit(), {b}) == b, [&] { return s(b); });
        {
            const std::size_t j = uniform(rng, 1, m);
            const B lhs = mod.right(mod.right(b, i, p), i + j - 1, q);
            const B rhs = mod.right(b, i, op.compose(p, j, q));
            rep.record("right-assoc", "(b ∘ⁱ p) ∘^{i+j-1} q = b ∘ⁱ (p ∘ⱼ q)", lhs == rhs,
                       [&] { return s(b) + " ; " + sp(p) + " ; " + sp(q); });
        }
        if (n >= 2) {
            std::size_t a = uniform(rng, 1, n), c = uniform(rng, 1, n);
            while (a == c) c = uniform(rng, 1, n);
            if (a > c) std::swap(a, c);
            const B lhs = mod.right(mod.right(b, a, p), c + m - 1, q);
            const B rhs = mod.right(mod.right(b, c, q), a, p);
            rep.record("right-parallel", "(b ∘ᵃ p) ∘^{c+m-1} q = (b ∘ᶜ q) ∘ᵃ p", lhs == rhs,
                       [&] { return s(b) + " ; " + sp(p) + " ; " + sp(q); });
        }
        {
            const std::size_t j = uniform(rng, 1, m);
            const auto qa = op.arity(q);
            const auto bs = draw(m + qa - 1);
            const B lhs = mod.left(op.compose(p, j, q), bs);
            std::vector<B> outer(bs.begin(), bs.begin() + static_cast<long>(j - 1));
            outer.push_back(mod.left(q, std::vector<B>(bs.begin() + static_cast<long>(j - 1),
                                                       bs.begin() + static_cast<long>(j - 1 + qa))));
            outer.insert(outer.end(), bs.begin() + static_cast<long>(j - 1 + qa), bs.end());
            const B rhs = mod.left(p, outer);
            rep.record("left-assoc", "(p ∘ⱼ q)(b…) = p(…, q(…), …)", lhs == rhs, [&] { return sp(p) + " ; " + sp(q); });
        }
        {
            const auto bs = draw(m);
            const std::size_t j = uniform(rng, 1, m);
            std::size_t offset = 0;
            for (std::size_t t = 0; t + 1 < j; ++t) offset += mod.arity(bs[t]);
            const std::size_t r = uniform(rng, 1, mod.arity(bs[j - 1]));
            auto inner = bs;
            inner[j - 1] = mod.right(bs[j - 1], r, q);
            const B lhs = mod.right(mod.left(p, bs), offset + r, q);
            const B rhs = mod.left(p, inner);
            rep.record("left-right", "p(b…) ∘^{o+r} q = p(…, bⱼ ∘ʳ q, …)", lhs == rhs,
                       [&] { return sp(p) + " ; " + s(bs[j - 1]) + " ; " + sp(q); });
        }
        {
            const auto bs = draw(m);
            const auto sigma = random_permutation(rng, m);
            std::vector<B> reordered(m);
            std::vector<std::size_t> arities;
            for (std::size_t j = 1; j <= m; ++j) {
                reordered[sigma(j) - 1] = bs[j - 1];
                arities.push_back(mod.arity(bs[j - 1]));
            }
            const B lhs = mod.left(op.act(sigma, p), bs);
            const B rhs = mod.act(multi_block_permutation(sigma, arities), mod.left(p, reordered));
            rep.record("sigma-left", "(σ*p)(b…) = τ*(p(b∘σ⁻¹…))", lhs == rhs,
                       [&] { return sp(p) + " σ=" + sigma.str(); });
        }
        {
            const std::size_t a = uniform(rng, 1, n), c = uniform(rng, 1, a);
            const auto u = random_injection(rng, a, n);
            const auto v = random_injection(rng, c, a);
            rep.record("lambda-functor", "(u∘v)* = v* u*", mod.act(u.after(v), b) == mod.act(v, mod.act(u, b)),
                       [&] { return s(b) + " u=" + u.str() + " v=" + v.str(); });
            rep.record("lambda-identity", "id* = id", mod.act(InjectiveMap::identity(n), b) == b, [&] { return s(b); });
        }
        {
            const std::size_t total = n + m - 1;
            const auto u = random_injection(rng, uniform(rng, 1, total), total).factor().first;
            const auto split = split_along_block(u, n, i, m);
            const B lhs = mod.act(u, mod.right(b, i, p));
            B rhs = mod.act(split.vx, b);
            if (split.i_prime != 0)
                rhs = mod.right(rhs, split.i_prime, op.act(InjectiveMap::from_image(split.y_image, m), p));
            rep.record("lambda-right", "u*(b ∘ⁱ p) = (u₁*b) ∘^{i'} (u₂*p)", lhs == rhs,
                       [&] { return s(b) + " ; " + sp(p) + " u=" + u.str(); });
        }
        {
            const auto bs = draw(m);
            std::size_t total = 0;
            for (const auto& x : bs) total += mod.arity(x);
            const auto u = random_injection(rng, uniform(rng, 1, total), total).factor().first;
            std::vector<std::size_t> kept_inputs;
            std::vector<B> kept;
            std::size_t offset = 0;
            for (std::size_t j = 0; j < m; ++j) {
                const auto a = mod.arity(bs[j]);
                std::vector<std::size_t> local;
                for (auto x : u.values())
                    if (x > offset && x <= offset + a) local.push_back(x - offset);
                if (!local.empty()) {
                    kept_inputs.push_back(j + 1);
                    kept.push_back(mod.act(InjectiveMap::from_image(local, a), bs[j]));
                }
                offset += a;
            }
            const B lhs = mod.act(u, mod.left(p, bs));
            const B rhs = mod.left(op.act(InjectiveMap::from_image(kept_inputs, m), p), kept);
            rep.record("lambda-left", "u*(p(b…)) = (u₀*p)(uⱼ*bⱼ…)", lhs == rhs,
                       [&] { return sp(p) + " u=" + u.str(); });
        }
    }
    return rep;
}

}  // namespace opcalc
