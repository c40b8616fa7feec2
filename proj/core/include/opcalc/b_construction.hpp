#pragma once

#include "opcalc/w_construction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

template <class E>
struct BVertex {
    WPoint<E> label;
    Rational height;

    friend bool operator==(const BVertex&, const BVertex&) = default;
    friend std::weak_ordering operator<=>(const BVertex&, const BVertex&) = default;
};

/// A point [T; {t_v}; {x_v}] of B𝒫 in normal form. The trivial tree is the class ι(*₁).
template <class E>
struct BPoint {
    Labeled<BVertex<E>> t;

    std::size_t arity() const { return t.arity(); }
    bool is_unit() const { return t.is_trivial(); }

    friend bool operator==(const BPoint& a, const BPoint& b) { return compare_compacted(a.t, b.t) == 0; }
    friend std::weak_ordering operator<=>(const BPoint& a, const BPoint& b) { return compare_compacted(a.t, b.t); }
};

/// Prime components of a B𝒫 point: the height-0 vertex (at most one, the root), the height-1
/// vertices (each sits on one leaf of a component), and the components in between in planar order.
/// A strand from the root directly to a leaf or a height-1 vertex gives a trivial component.
template <class E>
struct BDecomposition {
    struct Top {
        std::size_t component;
        std::size_t slot;  // local leaf of the component, 1-based
        WPoint<E> label;
    };
    std::optional<WPoint<E>> bottom;
    std::vector<BPoint<E>> components;
    std::vector<Top> tops;
    std::vector<std::size_t> leaf_word;

    /// B𝒫ₖ level: the largest component arity.
    std::size_t level() const {
        std::size_t k = 0;
        for (const auto& c : components) k = std::max(k, c.arity());
        return k;
    }
    /// Auxiliary index i of B𝒫_{k,i}: most vertices among components of arity k.
    std::size_t aux() const {
        const auto k = level();
        std::size_t i = 0;
        for (const auto& c : components)
            if (c.arity() == k) i = std::max(i, c.t.tree.vertex_count());
        return i;
    }
};

struct BStep {
    enum class Kind { Merge, RemoveUnit, Sort };
    Kind kind;
    VertexId v;
};

/// The bimodule resolution B𝒫 over W𝒫.
template <EffectiveOperad P>
class BModule {
public:
    using W = WOperad<P>;
    using Label = typename P::Element;
    using WElement = typename W::Element;
    using Element = BPoint<Label>;
    using Raw = Labeled<BVertex<Label>>;
    using Decomposition = BDecomposition<Label>;

    explicit BModule(P base = P()) : w_(std::move(base)) {}

    const W& w() const { return w_; }
    const P& base() const { return w_.base(); }
    std::string name() const { return "B" + base().name(); }
    std::size_t arity(const Element& b) const { return b.arity(); }
    Element unit() const { return {}; }

    Element corolla(const WElement& x, const Rational& h) const {
        Raw r;
        r.tree = Tree::corolla(x.arity());
        r.at = {BVertex<Label>{x, h}};
        return normalize(std::move(r));
    }

    /// Throws std::domain_error naming the violated condition.
    void validate(const Raw& r) const {
        r.tree.validate();
        if (r.at.size() != r.tree.vertices.size()) throw std::domain_error("payload count differs from vertex count");
        const auto parents = r.tree.parents();
        for (auto v : r.tree.planar_traversal()) {
            const auto& b = r.at[v];
            if (b.label.arity() != r.tree.vertices[v].arity())
                throw std::domain_error("vertex label of arity " + std::to_string(b.label.arity()) +
                                        " on a vertex of arity " + std::to_string(r.tree.vertices[v].arity()));
            if (b.height < Rational(0) || b.height > Rational(1))
                throw std::domain_error("height " + b.height.str() + " outside [0,1]");
            if (const auto& p = parents[v]; p && b.height < r.at[p->vertex].height)
                throw std::domain_error("monotonicity violated on the edge from a vertex at height " + b.height.str() +
                                        " down to a vertex at height " + r.at[p->vertex].height.str() +
                                        " (input " + std::to_string(p->slot + 1) + ")");
        }
    }

    std::vector<BStep> redexes(const Raw& r) const {
        std::vector<BStep> out;
        if (r.tree.is_trivial()) return out;
        const auto parents = r.tree.parents();
        for (auto v : r.tree.planar_traversal()) {
            if (const auto& p = parents[v]; p && r.at[v].height == r.at[p->vertex].height)
                out.push_back({BStep::Kind::Merge, v});
            if (r.tree.vertices[v].arity() == 1 && r.at[v].label.is_unit()) out.push_back({BStep::Kind::RemoveUnit, v});
            if (!slot_sort_permutation(r.tree, v).is_identity()) out.push_back({BStep::Kind::Sort, v});
        }
        return out;
    }

    /// Merge contracts an edge between equal heights by composing in W𝒫; RemoveUnit drops a
    /// vertex labelled by the unit of W𝒫; Sort reorders one vertex's slots.
    Raw apply(Raw r, const BStep& s) const {
        auto& t = r.tree;
        switch (s.kind) {
            case BStep::Kind::Merge: {
                const auto p = t.parents().at(s.v);
                if (!p) throw std::domain_error("merge: vertex has no parent");
                r.at[p->vertex].label = w_.compose(r.at[p->vertex].label, p->slot + 1, r.at[s.v].label);
                contract_edge(t, p->vertex, p->slot);
                break;
            }
            case BStep::Kind::RemoveUnit:
                remove_unary(t, s.v);
                if (t.is_trivial()) r.at.clear();
                break;
            case BStep::Kind::Sort: {
                const auto perm = slot_sort_permutation(t, s.v);
                auto& slots = t.vertices[s.v].slots;
                std::vector<Slot> sorted;
                for (std::size_t j = 1; j <= perm.domain(); ++j) sorted.push_back(slots[perm(j) - 1]);
                slots = std::move(sorted);
                r.at[s.v].label = w_.act(perm, r.at[s.v].label);
                break;
            }
        }
        return r;
    }

    Element normalize(Raw r) const {
        validate(r);
        for (;;) {
            auto rs = redexes(r);
            auto it = std::find_if(rs.begin(), rs.end(), [](const BStep& s) { return s.kind != BStep::Kind::Sort; });
            if (it == rs.end()) break;
            r = apply(std::move(r), *it);
        }
        return finish(std::move(r));
    }

    template <class Pick>
    Element normalize_with(Raw r, Pick&& pick) const {
        validate(r);
        for (auto rs = redexes(r); !rs.empty(); rs = redexes(r)) r = apply(std::move(r), rs[pick(rs.size())]);
        return finish(std::move(r));
    }

    /// Left action: p becomes a new vertex of height 0 below the roots of bs.
    Element left(const WElement& p, const std::vector<Element>& bs) const {
        require_arity(bs.size(), p.arity(), "B left action");
        if (p.is_unit()) return bs.at(0);
        Raw r;
        r.tree = Tree::corolla(p.arity());
        r.at = {BVertex<Label>{p, Rational(0)}};
        for (std::size_t j = bs.size(); j >= 1; --j) r = graft(r, j, bs[j - 1].t, [](BVertex<Label>&) {});
        return normalize(std::move(r));
    }

    /// Right action ∘ⁱ: p becomes a new vertex of height 1 on leaf i.
    Element right(const Element& b, std::size_t i, const WElement& p) const {
        require_input(i, arity(b), "B right action");
        Raw guest;
        if (!p.is_unit()) {
            guest.tree = Tree::corolla(p.arity());
            guest.at = {BVertex<Label>{p, Rational(1)}};
        }
        return normalize(graft(b.t, i, guest, [](BVertex<Label>&) {}));
    }

    Element act(const InjectiveMap& u, const Element& b) const {
        require_arity(u.codomain(), arity(b), "B lambda action");
        return normalize(delete_leaves(b.t, u, [&](const BVertex<Label>& v, const InjectiveMap& r) {
            return BVertex<Label>{w_.act(r, v.label), v.height};
        }));
    }

    /// μ′ : B𝒫 → W𝒫, all heights sent to 0: the labels merge into one W𝒫 point.
    WElement mu_prime(const Element& b) const {
        const auto& t = b.t.tree;
        if (t.is_trivial()) return w_.unit();
        auto rec = [&](auto&& self, VertexId v) -> WElement {
            WElement e = b.t.at[v].label;
            const auto& slots = t.vertices[v].slots;
            for (std::size_t s = slots.size(); s >= 1; --s)
                if (!slots[s - 1].is_leaf()) e = w_.compose(e, s, self(self, static_cast<VertexId>(slots[s - 1].value)));
            return e;
        };
        return relabel_planar(w_, rec(rec, *t.root), t.leaf_labeling());
    }

    Decomposition decompose(const Element& b) const {
        Decomposition d;
        const auto& t = b.t.tree;
        if (t.is_trivial()) {
            d.components.push_back(unit());
            d.leaf_word = {1};
            return d;
        }
        d.leaf_word = t.leaf_word();
        auto height = [&](std::size_t v) { return b.t.at[v].height; };
        auto strand = [&](const Slot& s) {
            const std::size_t index = d.components.size();
            if (s.is_leaf()) {
                d.components.push_back(unit());
                return;
            }
            const auto v = static_cast<VertexId>(s.value);
            if (height(v).is_one()) {
                d.components.push_back(unit());
                d.tops.push_back({index, 1, b.t.at[v].label});
                return;
            }
            Raw c;
            std::size_t leaf = 0;
            auto walk = [&](auto&& me, VertexId x) -> VertexId {
                const auto id = c.add_vertex({}, b.t.at[x]);
                std::vector<Slot> slots;
                for (const auto& sl : t.vertices[x].slots) {
                    if (sl.is_leaf()) {
                        slots.push_back(Slot::leaf(++leaf));
                    } else if (height(sl.value).is_one()) {
                        slots.push_back(Slot::leaf(++leaf));
                        d.tops.push_back({index, leaf, b.t.at[sl.value].label});
                    } else {
                        slots.push_back(Slot::edge(me(me, static_cast<VertexId>(sl.value))));
                    }
                }
                c.tree.vertices[id].slots = std::move(slots);
                return id;
            };
            c.tree.root = walk(walk, v);
            d.components.push_back(Element{compact(c)});
        };
        const auto root = *t.root;
        if (height(root).is_zero()) {
            d.bottom = b.t.at[root].label;
            for (const auto& s : t.vertices[root].slots) strand(s);
        } else {
            strand(Slot::edge(root));
        }
        return d;
    }

    Element reassemble(const Decomposition& d) const;

    std::pair<std::size_t, std::size_t> filtration_level(const Element& b) const {
        const auto d = decompose(b);
        return {d.level(), d.aux()};
    }

    /// Raw equivalent presentation: random slot permutations and inserted unit vertices at
    /// admissible heights.
    Raw random_presentation(Rng& rng, const Element& b, std::size_t unit_insertions = 2) const {
        Raw r = b.t;
        if (!r.tree.is_trivial())
            for (auto v : r.tree.planar_traversal()) {
                const auto perm = random_permutation(rng, r.tree.vertices[v].arity());
                auto& slots = r.tree.vertices[v].slots;
                std::vector<Slot> moved;
                for (std::size_t j = 1; j <= perm.domain(); ++j) moved.push_back(slots[perm(j) - 1]);
                slots = std::move(moved);
                r.at[v].label = w_.act(perm, r.at[v].label);
            }
        for (std::size_t k = 0; k < unit_insertions; ++k) {
            BVertex<Label> unit_vertex{w_.unit(), Rational(0)};
            if (r.tree.is_trivial()) {
                unit_vertex.height = random_rational(rng, Rational(0), Rational(1), 6);
                r.tree = Tree::corolla(1);
                r.at = {unit_vertex};
                continue;
            }
            const auto order = r.tree.planar_traversal();
            const VertexId v = order[uniform(rng, 0, order.size() - 1)];
            const std::size_t slot = uniform(rng, 0, r.tree.vertices[v].arity());
            if (slot == r.tree.vertices[v].arity()) {
                const auto p = r.tree.parents()[v];
                const Rational lo = p ? r.at[p->vertex].height : Rational(0);
                unit_vertex.height = random_rational(rng, lo, r.at[v].height, 6);
                const auto u = r.add_vertex({Slot::edge(v)}, unit_vertex);
                if (p)
                    r.tree.vertices[p->vertex].slots[p->slot] = Slot::edge(u);
                else
                    r.tree.root = u;
            } else {
                const Slot s = r.tree.vertices[v].slots[slot];
                const Rational hi = s.is_leaf() ? Rational(1) : r.at[s.value].height;
                unit_vertex.height = random_rational(rng, r.at[v].height, hi, 6);
                const auto u = r.add_vertex({s}, unit_vertex);
                r.tree.vertices[v].slots[slot] = Slot::edge(u);
            }
        }
        return r;
    }

    /// Raw point with monotone heights, some ties (to be merged), some unit vertices.
    Raw sample_raw(Rng& rng, std::size_t n, std::size_t max_arity = 3) const
        requires SampleableOperad<P>
    {
        Raw r;
        r.tree = random_labelled_tree(rng, n, max_arity, 0.15, 3);
        r.at.resize(r.tree.vertices.size());
        const auto parents = r.tree.parents();
        for (auto v : r.tree.planar_traversal()) {
            const auto k = r.tree.vertices[v].arity();
            auto& b = r.at[v];
            b.label = (k == 1 && coin(rng, 0.25)) ? w_.unit() : w_.sample(rng, k);
            const Rational lo = parents[v] ? r.at[parents[v]->vertex].height : Rational(0);
            const auto roll = uniform(rng, 0, 9);
            b.height = roll < 2 ? lo : roll < 3 ? Rational(1) : random_rational(rng, lo, Rational(1), 6);
        }
        return r;
    }

    Element sample(Rng& rng, std::size_t n) const
        requires SampleableOperad<P>
    {
        return normalize(sample_raw(rng, n));
    }

    /// `(v:h=p/q {<W point>} <child>*)`
    std::string to_string(const Element& b) const {
        const auto& t = b.t.tree;
        if (t.is_trivial()) return "l1";
        auto rec = [&](auto&& self, VertexId v) -> std::string {
            std::string s = "(v:h=" + b.t.at[v].height.str() + " {" + w_.to_string(b.t.at[v].label) + "}";
            for (const auto& sl : t.vertices[v].slots)
                s += " " + (sl.is_leaf() ? "l" + std::to_string(sl.value) : self(self, static_cast<VertexId>(sl.value)));
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
            auto it = n.attrs.find("h");
            if (it == n.attrs.end()) throw std::invalid_argument("vertex without a height ':h=p/q'");
            BVertex<Label> b{w_.parse(n.label), Rational::parse(it->second)};
            const auto id = r.add_vertex({}, std::move(b));
            std::vector<Slot> slots;
            for (const auto& ch : n.children) slots.push_back(ch.is_leaf ? Slot::leaf(ch.leaf) : Slot::edge(self(self, ch)));
            r.tree.vertices[id].slots = std::move(slots);
            return id;
        };
        r.tree.root = rec(rec, node);
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
        return Element{canonical_sort(r, [&](const BVertex<Label>& b, const InjectiveMap& perm) {
            return BVertex<Label>{w_.act(perm, b.label), b.height};
        })};
    }

    W w_;
};

/// Order in which prime components are recombined.
enum class BimoduleBracketing {
    RightFirst,  // right actions on each component, then the left action
    LeftFirst,   // left action on bare components, then right actions at global positions
};

/// Recombines a decomposition in a target bimodule M over W𝒫 (needs left, right, act), applying
/// f to every component.
template <class E, class M, class F>
typename M::Element assemble(const M& m, const BDecomposition<E>& d, F&& f,
                             BimoduleBracketing order = BimoduleBracketing::RightFirst) {
    using ME = typename M::Element;
    std::vector<ME> values;
    for (const auto& c : d.components) values.push_back(f(c));
    ME e;
    auto tops = d.tops;
    if (order == BimoduleBracketing::RightFirst) {
        std::sort(tops.begin(), tops.end(), [](const auto& a, const auto& b) {
            return a.component != b.component ? a.component < b.component : a.slot > b.slot;
        });
        for (const auto& top : tops) values[top.component] = m.right(values[top.component], top.slot, top.label);
        e = d.bottom ? m.left(*d.bottom, values) : values.at(0);
    } else {
        e = d.bottom ? m.left(*d.bottom, values) : values.at(0);
        std::vector<std::size_t> offset(d.components.size(), 0);
        for (std::size_t c = 1; c < d.components.size(); ++c) offset[c] = offset[c - 1] + d.components[c - 1].arity();
        std::sort(tops.begin(), tops.end(), [&](const auto& a, const auto& b) {
            return offset[a.component] + a.slot > offset[b.component] + b.slot;
        });
        for (const auto& top : tops) e = m.right(e, offset[top.component] + top.slot, top.label);
    }
    const auto labeling = InjectiveMap::permutation(d.leaf_word);
    return labeling.is_identity() ? e : m.act(labeling.inverse(), e);
}

template <EffectiveOperad P>
typename BModule<P>::Element BModule<P>::reassemble(const Decomposition& d) const {
    return assemble(*this, d, [](const Element& c) { return c; });
}

/// Extends an assignment F on prime points of arity ≤ k to B𝒫ₖ. Throws std::domain_error if a
/// component has more than k leaves.
template <EffectiveOperad P, class M, class F>
typename M::Element eval_truncated_bimodule_map(const BModule<P>& b, const M& m, F&& f, std::size_t k,
                                                const typename BModule<P>::Element& x,
                                                BimoduleBracketing order = BimoduleBracketing::RightFirst) {
    const auto d = b.decompose(x);
    for (std::size_t c = 0; c < d.components.size(); ++c)
        if (d.components[c].arity() > k)
            throw std::domain_error("prime component " + std::to_string(c + 1) + " has " +
                                    std::to_string(d.components[c].arity()) + " leaves, above level " +
                                    std::to_string(k));
    return assemble(m, d, f, order);
}

}  // namespace opcalc
