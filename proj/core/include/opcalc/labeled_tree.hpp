#pragma once

#include "opcalc/tree.hpp"

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opcalc {

/// A tree with one payload per stored vertex (indexed by VertexId).
template <class Payload>
struct Labeled {
    Tree tree;
    std::vector<Payload> at;

    Labeled() = default;
    Labeled(Tree t, std::vector<Payload> p) : tree(std::move(t)), at(std::move(p)) {
        if (at.size() != tree.vertices.size()) throw std::domain_error("payload count differs from vertex count");
    }

    std::size_t arity() const { return tree.leaf_count(); }
    bool is_trivial() const { return tree.is_trivial(); }

    VertexId add_vertex(std::vector<Slot> slots, Payload p) {
        tree.vertices.push_back(Vertex{std::move(slots)});
        at.push_back(std::move(p));
        return static_cast<VertexId>(tree.vertices.size() - 1);
    }
};

template <class Payload>
Labeled<Payload> compact(const Labeled<Payload>& x) {
    std::vector<long> map;
    Labeled<Payload> out;
    out.tree = x.tree.compacted(&map);
    out.at.resize(out.tree.vertices.size());
    for (std::size_t v = 0; v < map.size(); ++v)
        if (map[v] >= 0) out.at[static_cast<std::size_t>(map[v])] = x.at[v];
    return out;
}

/// Payload-level comparison of compacted labeled trees (shape, labelling, then payload in preorder).
template <class Payload>
std::weak_ordering compare_compacted(const Labeled<Payload>& a, const Labeled<Payload>& b) {
    if (auto c = a.tree <=> b.tree; c != 0) return c;
    for (std::size_t i = 0; i < a.at.size(); ++i) {
        if (a.at[i] < b.at[i]) return std::weak_ordering::less;
        if (b.at[i] < a.at[i]) return std::weak_ordering::greater;
    }
    return std::weak_ordering::equivalent;
}

/// Grafts guest at host leaf `leaf_index`. `on_edge(guest_root_payload)` lets the caller decorate
/// the new inner edge (which is stored on the guest root). Result is not compacted.
template <class Payload, class OnEdge>
Labeled<Payload> graft(const Labeled<Payload>& host, std::size_t leaf_index, const Labeled<Payload>& guest,
                       OnEdge&& on_edge) {
    auto g = graft(host.tree, leaf_index, guest.tree);
    Labeled<Payload> out;
    out.tree = std::move(g.tree);
    if (host.tree.is_trivial()) {
        out.at = guest.at;
        return out;
    }
    out.at = host.at;
    out.at.insert(out.at.end(), guest.at.begin(), guest.at.end());
    if (!guest.tree.is_trivial()) on_edge(out.at[*guest.tree.root + g.guest_offset]);
    return out;
}

/// Λ-action at the decorated level: the tree-level deletion plus `restrict(payload, kept_slots_map)`
/// on every vertex that lost inputs. Result is compacted.
template <class Payload, class Restrict>
Labeled<Payload> delete_leaves(const Labeled<Payload>& x, const InjectiveMap& u, Restrict&& restrict) {
    auto d = delete_leaves(x.tree, u);
    Labeled<Payload> out;
    out.tree = std::move(d.tree);
    out.at.reserve(d.ledger.size());
    for (const auto& rec : d.ledger) {
        if (rec.lost_slots())
            out.at.push_back(restrict(x.at[rec.old_vertex], rec.restriction()));
        else
            out.at.push_back(x.at[rec.old_vertex]);
    }
    if (x.tree.is_trivial()) out.at.clear();
    return out;
}

/// Sorts slots by minimal leaf label. `relabel(payload, perm)` must return the payload as seen
/// through the slot permutation (new slot j = old slot perm(j)), i.e. perm* applied to the label.
template <class Payload, class Relabel>
Labeled<Payload> canonical_sort(const Labeled<Payload>& x, Relabel&& relabel) {
    const auto perms = canonical_slot_order(x.tree);
    Labeled<Payload> out;
    out.tree = permute_slots(x.tree, perms);
    out.at = x.at;
    for (auto v : x.tree.planar_traversal())
        if (!perms[v].is_identity()) out.at[v] = relabel(x.at[v], perms[v]);
    return compact(out);
}

}  // namespace opcalc
