#pragma once

#include "opcalc/labeled_tree.hpp"
#include "opcalc/operad.hpp"
#include "opcalc/random.hpp"
#include "opcalc/rational.hpp"
#include "opcalc/text_util.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opcalc {

template <class E>
struct WVertex {
    E label;
    Rational length{1};  // the inner edge below this vertex; 1 at the root

    friend bool operator==(const WVertex&, const WVertex&) = default;
    friend std::weak_ordering operator<=>(const WVertex&, const WVertex&) = default;
};

/// A point [T; {t_e}; {a_v}] of W𝒫 in normal form.
template <class E>
struct WPoint {
    Labeled<WVertex<E>> t;

    std::size_t arity() const { return t.arity(); }
    bool is_unit() const { return t.is_trivial(); }

    friend bool operator==(const WPoint& a, const WPoint& b) { return compare_compacted(a.t, b.t) == 0; }
    friend std::weak_ordering operator<=>(const WPoint& a, const WPoint& b) { return compare_compacted(a.t, b.t); }
};

/// Prime components of a W𝒫 point, cut along the length-1 edges.
template <class E>
struct WDecomposition {
    struct Attachment {
        std::size_t parent;  // component index
        std::size_t slot;    // local leaf of the parent (1-based, planar)
    };
    /// Components in preorder; each carries planar local leaf labels.
    std::vector<WPoint<E>> components;
    std::vector<std::optional<Attachment>> attach;
    /// External labels of the leaves of the whole point, in planar order.
    std::vector<std::size_t> leaf_word;

    /// W𝒫ₖ level: the largest component arity (0 for the unit).
    std::size_t level() const {
        std::size_t k = 0;
        for (const auto& c : components) k = std::max(k, c.arity());
        return k;
    }
};

/// One rewriting step on a raw point; used to test confluence of the normal form.
struct WStep {
    enum class Kind { Contract, RemoveUnit, Sort };
    Kind kind;
    VertexId v;
};

/// The planar order of a vertex's slots by minimal leaf above them; perm(j) = old slot of new slot j.
inline InjectiveMap slot_sort_permutation(const Tree& t, VertexId v) {
    const auto& slots = t.vertices[v].slots;
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (std::size_t i = 0; i < slots.size(); ++i)
        keys.emplace_back(slots[i].is_leaf() ? slots[i].value : t.min_leaf(static_cast<VertexId>(slots[i].value)),
                          i + 1);
    std::sort(keys.begin(), keys.end());
    std::vector<std::size_t> word;
    for (auto& k : keys) word.push_back(k.second);
    return InjectiveMap::permutation(word);
}

/// σ* e for σ = L⁻¹: input j of the result is the planar input carrying external label j.
template <EffectiveOperad Q>
typename Q::Element relabel_planar(const Q& q, typename Q::Element e, const InjectiveMap& leaf_labeling) {
    if (leaf_labeling.is_identity()) return e;
    return q.act(leaf_labeling.inverse(), std::move(e));
}

/// Boardman-Vogt resolution of 𝒫 as an effective operad in its own right.
template <EffectiveOperad P>
class WOperad {
public:
    using Base = P;
    using Label = typename P::Element;
    using Element = WPoint<Label>;
    using Raw = Labeled<WVertex<Label>>;
    using Decomposition = WDecomposition<Label>;

    explicit WOperad(P base = P()) : base_(std::move(base)) {}

    const P& base() const { return base_; }
    std::string name() const { return "W" + base_.name(); }
    std::size_t arity(const Element& a) const { return a.arity(); }
    Element unit() const { return {}; }

    Element corolla(const Label& a) const {
        Raw r;
        r.tree = Tree::corolla(base_.arity(a));
        r.at = {WVertex<Label>{a, Rational(1)}};
        return normalize(std::move(r));
    }

    /// Grafts y at input i with a new edge of length 1.
    Element compose(const Element& x, std::size_t i, const Element& y) const {
        require_input(i, arity(x), "W compose");
        return normalize(graft(x.t, i, y.t, [](WVertex<Label>& r) { r.length = Rational(1); }));
    }

    Element act(const InjectiveMap& u, const Element& x) const {
        require_arity(u.codomain(), arity(x), "W lambda action");
        return normalize(delete_leaves(x.t, u, [&](const WVertex<Label>& w, const InjectiveMap& r) {
            return WVertex<Label>{base_.act(r, w.label), w.length};
        }));
    }

    /// Throws std::domain_error on malformed raw data: bad tree, label arity, non-unary units,
    /// lengths outside [0,1].
    void validate(const Raw& r) const {
        r.tree.validate();
        if (r.at.size() != r.tree.vertices.size()) throw std::domain_error("payload count differs from vertex count");
        for (auto v : r.tree.planar_traversal()) {
            const auto& w = r.at[v];
            const auto k = r.tree.vertices[v].arity();
            if (base_.arity(w.label) != k) {
                if (w.label == base_.unit())
                    throw std::domain_error("unit label on a vertex of arity " + std::to_string(k) +
                                            ": units are unary");
                throw std::domain_error("vertex label of arity " + std::to_string(base_.arity(w.label)) +
                                        " on a vertex of arity " + std::to_string(k));
            }
            if (v != *r.tree.root && (w.length < Rational(0) || w.length > Rational(1)))
                throw std::domain_error("edge length " + w.length.str() + " outside [0,1]");
        }
    }

    std::vector<WStep> redexes(const Raw& r) const {
        std::vector<WStep> out;
        if (r.tree.is_trivial()) return out;
        for (auto v : r.tree.planar_traversal()) {
            if (v != *r.tree.root && r.at[v].length.is_zero()) out.push_back({WStep::Kind::Contract, v});
            if (r.tree.vertices[v].arity() == 1 && r.at[v].label == base_.unit())
                out.push_back({WStep::Kind::RemoveUnit, v});
            if (!slot_sort_permutation(r.tree, v).is_identity()) out.push_back({WStep::Kind::Sort, v});
        }
        return out;
    }

    /// Applies one step. Contract merges a 0-length edge by ∘ᵢ; RemoveUnit drops a unit vertex,
    /// the surviving edge taking the larger of the two lengths; Sort reorders one vertex's slots.
    Raw apply(Raw r, const WStep& s) const {
        auto& t = r.tree;
        switch (s.kind) {
            case WStep::Kind::Contract: {
                const auto p = t.parents().at(s.v);
                if (!p) throw std::domain_error("contract: vertex has no parent");
                r.at[p->vertex].label = base_.compose(r.at[p->vertex].label, p->slot + 1, r.at[s.v].label);
                contract_edge(t, p->vertex, p->slot);
                break;
            }
            case WStep::Kind::RemoveUnit: {
                const Slot in = t.vertices[s.v].slots.at(0);
                const bool at_root = t.root == s.v;
                if (!in.is_leaf()) {
                    auto& below = r.at[in.value].length;
                    below = at_root ? Rational(1) : max(below, r.at[s.v].length);
                }
                remove_unary(t, s.v);
                if (t.is_trivial()) r.at.clear();
                break;
            }
            case WStep::Kind::Sort: {
                const auto perm = slot_sort_permutation(t, s.v);
                auto& slots = t.vertices[s.v].slots;
                std::vector<Slot> sorted;
                for (std::size_t j = 1; j <= perm.domain(); ++j) sorted.push_back(slots[perm(j) - 1]);
                slots = std::move(sorted);
                r.at[s.v].label = base_.act(perm, r.at[s.v].label);
                break;
            }
        }
        return r;
    }

    /// Canonical form of a raw point: contract 0-edges, drop unit vertices, sort slots by
    /// minimal leaf. Idempotent.
    Element normalize(Raw r) const {
        validate(r);
        for (;;) {
            auto rs = redexes(r);
            auto it = std::find_if(rs.begin(), rs.end(), [](const WStep& s) { return s.kind != WStep::Kind::Sort; });
            if (it == rs.end()) break;
            r = apply(std::move(r), *it);
        }
        return finish(std::move(r));
    }

    /// Normal form reached by applying steps in the order chosen by `pick(#redexes)`.
    template <class Pick>
    Element normalize_with(Raw r, Pick&& pick) const {
        validate(r);
        for (auto rs = redexes(r); !rs.empty(); rs = redexes(r)) r = apply(std::move(r), rs[pick(rs.size())]);
        return finish(std::move(r));
    }

    /// μ : W𝒫 → 𝒫, all lengths set to 0.
    Label mu(const Element& a) const {
        const auto& t = a.t.tree;
        if (t.is_trivial()) return base_.unit();
        auto rec = [&](auto&& self, VertexId v) -> Label {
            Label e = a.t.at[v].label;
            const auto& slots = t.vertices[v].slots;
            for (std::size_t s = slots.size(); s >= 1; --s)
                if (!slots[s - 1].is_leaf()) e = base_.compose(e, s, self(self, static_cast<VertexId>(slots[s - 1].value)));
            return e;
        };
        return relabel_planar(base_, rec(rec, *t.root), t.leaf_labeling());
    }

    Decomposition decompose(const Element& a) const {
        Decomposition d;
        const auto& t = a.t.tree;
        if (t.is_trivial()) {
            d.leaf_word = {1};
            return d;
        }
        d.leaf_word = t.leaf_word();
        // Builds the component rooted at `top` and then, in planar order, the components above it.
        auto build = [&](auto&& self, VertexId top, std::optional<typename Decomposition::Attachment> at) -> void {
            const std::size_t index = d.components.size();
            d.components.emplace_back();
            d.attach.push_back(at);
            Raw c;
            std::size_t leaf = 0;
            std::vector<std::pair<VertexId, std::size_t>> cut;  // (vertex above, local slot)
            auto walk = [&](auto&& me, VertexId v) -> VertexId {
                const auto id = c.add_vertex({}, a.t.at[v]);
                std::vector<Slot> slots;
                for (const auto& s : t.vertices[v].slots) {
                    if (s.is_leaf()) {
                        slots.push_back(Slot::leaf(++leaf));
                    } else if (a.t.at[s.value].length.is_one()) {
                        slots.push_back(Slot::leaf(++leaf));
                        cut.emplace_back(static_cast<VertexId>(s.value), leaf);
                    } else {
                        slots.push_back(Slot::edge(me(me, static_cast<VertexId>(s.value))));
                    }
                }
                c.tree.vertices[id].slots = std::move(slots);
                return id;
            };
            c.tree.root = walk(walk, top);
            c.at[*c.tree.root].length = Rational(1);
            d.components[index] = Element{compact(c)};
            for (auto [v, slot] : cut) self(self, v, typename Decomposition::Attachment{index, slot});
        };
        build(build, *t.root, std::nullopt);
        return d;
    }

    /// Inverse of decompose: grafts the components back along length-1 edges.
    Element reassemble(const Decomposition& d) const {
        if (d.components.empty()) return unit();
        std::vector<std::vector<std::size_t>> children(d.components.size());
        for (std::size_t c = 1; c < d.components.size(); ++c) children.at(d.attach.at(c)->parent).push_back(c);
        auto rec = [&](auto&& self, std::size_t c) -> Raw {
            Raw r = d.components[c].t;
            auto kids = children[c];
            std::sort(kids.begin(), kids.end(), [&](auto a, auto b) { return d.attach[a]->slot > d.attach[b]->slot; });
            for (auto k : kids)
                r = graft(r, d.attach[k]->slot, self(self, k), [](WVertex<Label>& w) { w.length = Rational(1); });
            return r;
        };
        Raw r = rec(rec, 0);
        set_planar_leaf_labels(r.tree, d.leaf_word);
        return normalize(std::move(r));
    }

    std::size_t filtration_level(const Element& a) const { return decompose(a).level(); }

    /// Raw equivalent presentation of a: random slot permutations and inserted unit vertices.
    Raw random_presentation(Rng& rng, const Element& a, std::size_t unit_insertions = 2) const {
        Raw r = a.t;
        if (!r.tree.is_trivial())
            for (auto v : r.tree.planar_traversal()) {
                const auto perm = random_permutation(rng, r.tree.vertices[v].arity());
                auto& slots = r.tree.vertices[v].slots;
                std::vector<Slot> moved;
                for (std::size_t j = 1; j <= perm.domain(); ++j) moved.push_back(slots[perm(j) - 1]);
                slots = std::move(moved);
                r.at[v].label = base_.act(perm, r.at[v].label);
            }
        for (std::size_t k = 0; k < unit_insertions; ++k) {
            const auto unit_vertex = WVertex<Label>{base_.unit(), Rational(1)};
            if (r.tree.is_trivial()) {
                r.tree = Tree::corolla(1);
                r.at = {unit_vertex};
                continue;
            }
            const auto order = r.tree.planar_traversal();
            const VertexId v = order[uniform(rng, 0, order.size() - 1)];
            const std::size_t slot = uniform(rng, 0, r.tree.vertices[v].arity());  // arity() means "below v"
            if (slot == r.tree.vertices[v].arity()) {
                // unit below v: keep max(s, r) equal to v's old length
                const Rational old = r.at[v].length;
                const auto u = r.add_vertex({Slot::edge(v)}, unit_vertex);
                if (r.tree.root == v) {
                    r.tree.root = u;
                    r.at[v].length = random_rational(rng, Rational(0), Rational(1), 4);
                } else {
                    const auto p = r.tree.parents()[v];
                    r.tree.vertices[p->vertex].slots[p->slot] = Slot::edge(u);
                    r.at[u].length = old;
                    r.at[v].length = random_rational(rng, Rational(0), old, 4);
                }
            } else {
                const Slot s = r.tree.vertices[v].slots[slot];
                auto w = unit_vertex;
                w.length = random_rational(rng, Rational(0), Rational(1), 4);
                if (!s.is_leaf()) {
                    w.length = r.at[s.value].length;
                    r.at[s.value].length = random_rational(rng, Rational(0), w.length, 4);
                }
                const auto u = r.add_vertex({s}, w);
                r.tree.vertices[v].slots[slot] = Slot::edge(u);
            }
        }
        return r;
    }

    /// Raw point on a random labelled tree: some 0-length edges, some unit vertices.
    Raw sample_raw(Rng& rng, std::size_t n, std::size_t max_arity = 3) const
        requires SampleableOperad<P>
    {
        Raw r;
        r.tree = random_labelled_tree(rng, n, max_arity, 0.15, 3);
        r.at.resize(r.tree.vertices.size());
        for (std::size_t v = 0; v < r.tree.vertices.size(); ++v) {
            const auto k = r.tree.vertices[v].arity();
            auto& w = r.at[v];
            w.label = (k == 1 && coin(rng, 0.3)) ? base_.unit() : base_.sample(rng, k);
            const auto roll = uniform(rng, 0, 9);
            w.length = roll < 2 ? Rational(0) : roll < 5 ? Rational(1) : random_rational(rng, Rational(0), Rational(1), 4);
        }
        r.at[*r.tree.root].length = Rational(1);
        return r;
    }

    Element sample(Rng& rng, std::size_t n) const
        requires SampleableOperad<P>
    {
        return normalize(sample_raw(rng, n));
    }

    /// `(v <label> <child>*)` with children `l<k>` or a nested vertex followed by `:t=p/q`.
    std::string to_string(const Element& a) const {
        const auto& t = a.t.tree;
        if (t.is_trivial()) return "l1";
        auto rec = [&](auto&& self, VertexId v) -> std::string {
            std::string s = "(v " + brace_if_spaced(base_.to_string(a.t.at[v].label));
            for (const auto& sl : t.vertices[v].slots) {
                if (sl.is_leaf()) {
                    s += " l" + std::to_string(sl.value);
                } else {
                    const auto c = static_cast<VertexId>(sl.value);
                    s += " " + self(self, c) + ":t=" + a.t.at[c].length.str();
                }
            }
            return s + ")";
        };
        return rec(rec, *t.root);
    }

    Raw parse_raw(const TextNode& node) const
        requires ParseableOperad<P>
    {
        Raw r;
        if (node.is_leaf) {
            if (node.leaf != 1) throw std::invalid_argument("a bare leaf must be l1");
            return r;
        }
        auto rec = [&](auto&& self, const TextNode& n) -> VertexId {
            WVertex<Label> w{base_.parse(n.label), Rational(1)};
            if (auto it = n.attrs.find("t"); it != n.attrs.end()) w.length = Rational::parse(it->second);
            const auto id = r.add_vertex({}, std::move(w));
            std::vector<Slot> slots;
            for (const auto& ch : n.children)
                slots.push_back(ch.is_leaf ? Slot::leaf(ch.leaf) : Slot::edge(self(self, ch)));
            r.tree.vertices[id].slots = std::move(slots);
            return id;
        };
        r.tree.root = rec(rec, node);
        r.at[*r.tree.root].length = Rational(1);
        return r;
    }

    Element parse(const std::string& text) const
        requires ParseableOperad<P>
    {
        return normalize(parse_raw(parse_tree_text(text)));
    }

private:
    Element finish(Raw r) const {
        if (r.tree.is_trivial()) return unit();
        r.at[*r.tree.root].length = Rational(1);
        return Element{canonical_sort(r, [&](const WVertex<Label>& w, const InjectiveMap& perm) {
            return WVertex<Label>{base_.act(perm, w.label), w.length};
        })};
    }

    P base_;
};

enum class Bracketing { Nested, LeftToRight };

/// Extends an assignment F on prime points of arity ≤ k to W𝒫ₖ: decompose, apply F to the
/// components, compose in Q. Throws std::domain_error if a component has more than k leaves.
template <EffectiveOperad P, EffectiveOperad Q, class F>
typename Q::Element eval_truncated_operad_map(const WOperad<P>& w, const Q& q, F&& f, std::size_t k,
                                              const typename WOperad<P>::Element& a,
                                              Bracketing order = Bracketing::Nested) {
    const auto d = w.decompose(a);
    for (std::size_t c = 0; c < d.components.size(); ++c)
        if (d.components[c].arity() > k)
            throw std::domain_error("prime component " + std::to_string(c + 1) + " has " +
                                    std::to_string(d.components[c].arity()) + " leaves, above level " +
                                    std::to_string(k));
    if (d.components.empty()) return q.unit();
    using QE = typename Q::Element;
    QE e;
    if (order == Bracketing::Nested) {
        std::vector<std::vector<std::size_t>> children(d.components.size());
        for (std::size_t c = 1; c < d.components.size(); ++c) children[d.attach[c]->parent].push_back(c);
        auto rec = [&](auto&& self, std::size_t c) -> QE {
            QE x = f(d.components[c]);
            for (auto it = children[c].rbegin(); it != children[c].rend(); ++it)
                x = q.compose(x, d.attach[*it]->slot, self(self, *it));
            return x;
        };
        e = rec(rec, 0);
    } else {
        // Left-nested: ((F₀ ∘ F₁) ∘ F₂) ..., tracking where each open input came from.
        e = f(d.components[0]);
        std::vector<std::pair<std::size_t, std::size_t>> open;
        for (std::size_t j = 1; j <= d.components[0].arity(); ++j) open.emplace_back(0, j);
        for (std::size_t c = 1; c < d.components.size(); ++c) {
            const auto at = *d.attach[c];
            const auto pos = static_cast<std::size_t>(
                std::find(open.begin(), open.end(), std::pair{at.parent, at.slot}) - open.begin());
            e = q.compose(e, pos + 1, f(d.components[c]));
            std::vector<std::pair<std::size_t, std::size_t>> fresh;
            for (std::size_t j = 1; j <= d.components[c].arity(); ++j) fresh.emplace_back(c, j);
            open.erase(open.begin() + static_cast<long>(pos));
            open.insert(open.begin() + static_cast<long>(pos), fresh.begin(), fresh.end());
        }
    }
    return relabel_planar(q, std::move(e), InjectiveMap::permutation(d.leaf_word));
}

}  // namespace opcalc
