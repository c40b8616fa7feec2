#pragma once

#include "opcalc/mapping.hpp"
#include "opcalc/operads/little_intervals.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opcalc {

enum class Colour { Closed, Open };

/// A point of SC₁(n, m; k): a 𝒟₁ configuration; for the open colour the last interval is the
/// open input and must end at 1.
struct SC1Element {
    Colour colour = Colour::Closed;
    IntervalConfig discs;

    std::size_t arity() const { return discs.arity(); }
    /// Number of closed inputs n.
    std::size_t closed_inputs() const { return colour == Colour::Open ? arity() - 1 : arity(); }

    void validate() const {
        discs.validate();
        if (discs.arity() == 0) throw std::domain_error("SC1 element without inputs");
        if (colour == Colour::Open && !discs.intervals.back().hi.is_one())
            throw std::domain_error("open colour needs c_{n+1}(1) = 1, got " + discs.intervals.back().hi.str());
    }

    friend bool operator==(const SC1Element&, const SC1Element&) = default;
};

/// c ∘ᵢ c′: closed inputs take closed-colour elements, the open input takes an open-colour one.
inline SC1Element sc1_compose(const SC1Element& c, std::size_t i, const SC1Element& inner) {
    c.validate();
    inner.validate();
    require_input(i, c.arity(), "SC1 compose");
    const bool open_slot = c.colour == Colour::Open && i == c.arity();
    if (open_slot != (inner.colour == Colour::Open))
        throw std::domain_error(open_slot ? "the open input takes an open-colour element"
                                          : "a closed input takes a closed-colour element");
    return {c.colour, LittleIntervals{}.compose(c.discs, i, inner.discs)};
}

/// Random element with n closed inputs on the grid of twelfths, inputs in random positional order.
inline SC1Element random_sc1(Rng& rng, std::size_t n, Colour colour) {
    const std::size_t k = colour == Colour::Open ? n + 1 : n;
    if (k == 0) throw std::domain_error("SC1 element without inputs");
    std::vector<long> points;
    const long grid = 12;
    while (points.size() < 2 * k) {
        const long p = static_cast<long>(uniform(rng, 0, grid));
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    if (colour == Colour::Open) points.back() = grid;
    std::vector<Interval> slots;
    for (std::size_t j = 0; j < k; ++j) slots.push_back({Rational(points[2 * j], grid), Rational(points[2 * j + 1], grid)});
    SC1Element c{colour, {}};
    const auto perm = random_permutation(rng, n);
    for (std::size_t j = 1; j <= n; ++j) c.discs.intervals.push_back(slots[perm(j) - 1]);
    if (colour == Colour::Open) c.discs.intervals.push_back(slots.back());
    return c;
}

/// A slab of heights: a gap hᵢ (closed interval) or a disc cᵢ (open interval, closed at 1 for
/// the open input). `index` is the gap number or the disc's input label.
struct Region {
    bool gap = true;
    std::size_t index = 0;
    Rational lo, hi;
    bool closed_hi = false;

    bool contains(const Rational& h) const {
        if (gap) return lo <= h && h <= hi;
        return lo < h && (h < hi || (closed_hi && h == hi));
    }
    std::string str() const {
        return (gap ? "h" : "c") + std::to_string(index) + (gap ? "[" : "]") + lo.str() + "," + hi.str() +
               (gap || closed_hi ? "]" : "[");
    }
};

/// The discs in order of position, interleaved with the gaps between them, from height 0 up.
inline std::vector<Region> regions(const SC1Element& c) {
    c.validate();
    std::vector<std::size_t> order(c.arity());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return c.discs.intervals[a].lo < c.discs.intervals[b].lo;
    });
    std::vector<Region> out;
    Rational below(0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& iv = c.discs.intervals[order[k]];
        out.push_back({true, k, below, iv.lo, true});
        const bool open_input = c.colour == Colour::Open && order[k] + 1 == c.arity();
        out.push_back({false, order[k] + 1, iv.lo, iv.hi, open_input});
        below = iv.hi;
    }
    if (c.colour == Colour::Closed) out.push_back({true, order.size(), below, Rational(1), true});
    return out;
}

/// The gap embeddings h₀..hₙ.
inline std::vector<Interval> gaps(const SC1Element& c) {
    std::vector<Interval> out;
    for (const auto& r : regions(c))
        if (r.gap) out.push_back({r.lo, r.hi});
    return out;
}

/// A maximal connected piece of y inside one region, or a trivial tree for a strand that
/// crosses the region without a vertex in it. Heights are those of y; leaves are numbered planarly.
template <class E>
struct Subpoint {
    std::size_t region = 0;
    BPoint<E> body;
    std::size_t position = 0;  // planar position of the strand entering the piece
};

/// 𝒯[r; y] for every region r, each in planar order. Throws std::domain_error if two adjacent
/// vertices share a height.
template <class E>
std::vector<std::vector<Subpoint<E>>> extract_subpoints(const BPoint<E>& y, const SC1Element& c) {
    const auto rs = regions(c);
    const long top = static_cast<long>(rs.size());
    std::vector<std::vector<Subpoint<E>>> out(rs.size());
    auto region_of = [&](const Rational& h) -> long {
        for (std::size_t r = 0; r < rs.size(); ++r)
            if (rs[r].contains(h)) return static_cast<long>(r);
        throw std::domain_error("height " + h.str() + " lies in no region");
    };
    auto trivial = [&](long below, long above, std::size_t position) {
        for (long r = below + 1; r < above; ++r) out[static_cast<std::size_t>(r)].push_back({static_cast<std::size_t>(r), {}, position});
    };

    const auto& t = y.t.tree;
    if (t.is_trivial()) {
        trivial(-1, top, 0);
        return out;
    }
    std::vector<long> reg(t.vertices.size(), -1);
    std::vector<std::size_t> position(t.vertices.size(), 0);
    std::size_t counter = 0;
    // planar positions of vertices and leaf stubs; a leaf stub's position is counted after its vertex
    std::vector<std::vector<std::size_t>> leaf_position(t.vertices.size());
    auto number = [&](auto&& self, VertexId v) -> void {
        position[v] = counter++;
        reg[v] = region_of(y.t.at[v].height);
        for (const auto& s : t.vertices[v].slots) {
            if (s.is_leaf())
                leaf_position[v].push_back(counter++);
            else {
                leaf_position[v].push_back(0);
                self(self, static_cast<VertexId>(s.value));
            }
        }
    };
    const auto root = *t.root;
    number(number, root);

    trivial(-1, reg[root], position[root]);
    for (auto v : t.planar_traversal()) {
        const auto& slots = t.vertices[v].slots;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (slots[k].is_leaf()) {
                trivial(reg[v], top, leaf_position[v][k]);
                continue;
            }
            const auto u = static_cast<VertexId>(slots[k].value);
            if (y.t.at[u].height == y.t.at[v].height)
                throw std::domain_error("adjacent vertices share the height " + y.t.at[v].height.str() + "; normalize first");
            trivial(reg[v], reg[u], position[u]);
        }
    }

    const auto parents = t.parents();
    for (auto v : t.planar_traversal()) {
        if (parents[v] && reg[parents[v]->vertex] == reg[v]) continue;
        Labeled<BVertex<E>> body;
        std::size_t leaf = 0;
        auto walk = [&](auto&& self, VertexId x) -> VertexId {
            const auto id = body.add_vertex({}, y.t.at[x]);
            std::vector<Slot> slots;
            for (const auto& s : t.vertices[x].slots) {
                if (!s.is_leaf() && reg[s.value] == reg[v])
                    slots.push_back(Slot::edge(self(self, static_cast<VertexId>(s.value))));
                else
                    slots.push_back(Slot::leaf(++leaf));
            }
            body.tree.vertices[id].slots = std::move(slots);
            return id;
        };
        body.tree.root = walk(walk, v);
        const auto r = static_cast<std::size_t>(reg[v]);
        out[r].push_back({r, BPoint<E>{compact(body)}, position[v]});
    }
    for (auto& level : out)
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.position < b.position; });
    return out;
}

/// c*: heights pulled back along the disc embedding. Throws if a height leaves the disc.
template <class E>
BPoint<E> rescale(const Region& disc, const BPoint<E>& s) {
    if (disc.gap) throw std::domain_error("rescale: " + disc.str() + " is a gap");
    BPoint<E> out = s;
    for (auto& v : out.t.at) {
        if (!disc.contains(v.height))
            throw std::domain_error("rescale: height " + v.height.str() + " outside " + disc.str());
        v.height = (v.height - disc.lo) / (disc.hi - disc.lo);
    }
    return out;
}

template <class E>
BPoint<E> rescale(const Interval& disc, const BPoint<E>& s, bool closed_hi = false) {
    return rescale(Region{false, 0, disc.lo, disc.hi, closed_hi}, s);
}

/// Region-by-region assembly: the single piece of the lowest region, then for every region up
/// the current value applied to that region's pieces. Inputs come out in planar order.
template <class V, class E, class Eval, class Combine>
V assemble_regions(const BPoint<E>& y, const SC1Element& c, Eval&& eval, Combine&& combine) {
    const auto rs = regions(c);
    const auto pieces = extract_subpoints(y, c);
    if (pieces.front().size() != 1) throw std::logic_error("the lowest region must hold exactly one piece");
    V current = eval(rs.front(), pieces.front().front());
    for (std::size_t r = 1; r < rs.size(); ++r) {
        std::vector<V> values;
        for (const auto& s : pieces[r]) values.push_back(eval(rs[r], s));
        current = combine(std::move(current), std::move(values));
    }
    return current;
}

/// The 𝒟₁-action on Bimod(B𝒫, 𝒬): gaps through η∘μ, disc i through fᵢ after rescaling.
template <EffectiveOperad P, EffectiveOperad Q>
typename Q::Element d1_action_eval(const BModule<P>& bm, const Q& q,
                                   const OperadMap<WPoint<typename P::Element>, typename Q::Element>& delta_star,
                                   const SC1Element& c,
                                   const std::vector<BimoduleMap<BPoint<typename P::Element>, typename Q::Element>>& fs,
                                   const BPoint<typename P::Element>& y) {
    using QE = typename Q::Element;
    if (c.colour != Colour::Closed) throw std::domain_error("d1 action needs a closed-colour element");
    if (c.arity() == 0) throw std::domain_error("d1 action needs n >= 1");
    require_arity(fs.size(), c.arity(), "d1 action");
    auto eval = [&](const Region& r, const Subpoint<typename P::Element>& s) -> QE {
        if (r.gap) return delta_star(bm.mu_prime(s.body));
        return fs[r.index - 1](rescale(r, s.body));
    };
    auto combine = [&](QE current, std::vector<QE> values) { return gamma(q, std::move(current), values); };
    auto value = assemble_regions<QE>(y, c, eval, combine);
    return relabel_planar(q, std::move(value), y.t.tree.leaf_labeling());
}

/// α_{n,o}(c; f₁..fₙ, f_{n+1})(y) in 𝒬∘X.
template <EffectiveOperad P, EffectiveOperad Q>
Tagged<typename Q::Element> alpha_eval(
    const BModule<P>& bm, const Q& q, const OperadMap<WPoint<typename P::Element>, typename Q::Element>& delta_star,
    const SC1Element& c, const std::vector<BimoduleMap<BPoint<typename P::Element>, typename Q::Element>>& fs,
    const BimoduleMap<BPoint<typename P::Element>, Tagged<typename Q::Element>>& last,
    const BPoint<typename P::Element>& y) {
    using QE = typename Q::Element;
    using T = Tagged<QE>;
    if (c.colour != Colour::Open) throw std::domain_error("alpha needs an open-colour element");
    require_arity(fs.size(), c.closed_inputs(), "alpha");
    auto eval = [&](const Region& r, const Subpoint<typename P::Element>& s) -> T {
        if (r.gap) return {delta_star(bm.mu_prime(s.body)), {}};
        if (r.index == c.arity()) return last(rescale(r, s.body));
        return {fs[r.index - 1](rescale(r, s.body)), {}};
    };
    auto combine = [&](T current, std::vector<T> values) {
        std::vector<QE> qs;
        T out;
        for (auto& v : values) {
            qs.push_back(std::move(v.value));
            out.tags.insert(out.tags.end(), v.tags.begin(), v.tags.end());
        }
        out.value = gamma(q, std::move(current.value), qs);
        return out;
    };
    auto value = assemble_regions<T>(y, c, eval, combine);
    const auto labeling = y.t.tree.leaf_labeling();
    if (labeling.is_identity()) return value;
    const auto inv = labeling.inverse();
    T out{q.act(inv, value.value), {}};
    for (std::size_t j = 1; j <= inv.domain(); ++j) out.tags.push_back(value.tags.at(inv(j) - 1));
    return out;
}

/// The recipe written out: pieces print as eta_mu(name), *1' (trivial in a gap), fi(ci*(name))
/// and fi(iota(*1)); an applied value is parenthesised before being applied again, and a unit
/// lowest piece is dropped.
template <class E>
std::string alpha_display(const BPoint<E>& y, const SC1Element& c,
                          const std::function<std::string(const BPoint<E>&)>& name) {
    struct Formal {
        std::string text;
        bool unit = false;
        bool applied = false;
    };
    auto eval = [&](const Region& r, const Subpoint<E>& s) -> Formal {
        if (r.gap) return s.body.is_unit() ? Formal{"*1'", true, false} : Formal{"eta_mu(" + name(s.body) + ")"};
        const auto f = "f" + std::to_string(r.index);
        if (s.body.is_unit()) return {f + "(iota(*1))"};
        return {f + "(c" + std::to_string(r.index) + "*(" + name(s.body) + "))"};
    };
    auto combine = [](Formal current, std::vector<Formal> values) -> Formal {
        if (current.unit && values.size() == 1) return values.front();
        std::string s = current.applied ? "(" + current.text + ")" : current.text;
        s += "(";
        for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + values[k].text;
        return {s + ")", false, true};
    };
    return assemble_regions<Formal>(y, c, eval, combine).text;
}

/// The SC₁-action on (loops, hofiber points): gᵢ reparametrised on disc i, δ_* on the gaps, and
/// the path of the hofiber point on the open disc.
template <class WE, class QE>
PathOfMaps<WE, QE> sc1_act_paths(const SC1Element& c, const OperadMap<WE, QE>& delta_star,
                                 const std::vector<PathOfMaps<WE, QE>>& paths) {
    require_arity(paths.size(), c.arity(), "SC1 action on paths");
    const auto rs = regions(c);
    std::vector<Rational> breaks;
    for (const auto& r : rs) {
        if (r.gap) continue;
        const Interval iv{r.lo, r.hi};
        for (auto b : {iv.lo, iv.hi})
            if (b > Rational(0) && b < Rational(1)) breaks.push_back(b);
        for (const auto& b : paths[r.index - 1].breakpoints) breaks.push_back(iv.at(b));
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::string name = "sc1(";
    for (std::size_t k = 0; k < paths.size(); ++k) name += (k ? ", " : "") + paths[k].name;
    return {name + ")", breaks, [rs, delta_star, paths](const WE& y, const Rational& t) {
                for (const auto& r : rs) {
                    if (!r.contains(t)) continue;
                    if (r.gap) return delta_star(y);
                    return paths[r.index - 1](y, (t - r.lo) / (r.hi - r.lo));
                }
                throw std::domain_error("time " + t.str() + " lies in no region");
            }};
}

}  // namespace opcalc
