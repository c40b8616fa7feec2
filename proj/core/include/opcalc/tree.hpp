#pragma once

#include "opcalc/injective_map.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace opcalc {

using VertexId = std::uint32_t;

/// One ordered input slot of a vertex: either an external leaf (carrying its
/// external label) or an inner edge to a child vertex.
struct Slot {
    enum class Kind : std::uint8_t { Leaf, Edge };
    Kind kind = Kind::Leaf;
    std::size_t value = 1;  // leaf label (1-based) or child VertexId

    static Slot leaf(std::size_t label) { return {Kind::Leaf, label}; }
    static Slot edge(VertexId child) { return {Kind::Edge, child}; }
    bool is_leaf() const { return kind == Kind::Leaf; }

    friend bool operator==(const Slot&, const Slot&) = default;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Vertex {
    std::vector<Slot> slots;
    std::size_t arity() const { return slots.size(); }
    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Planar rooted tree with externally labelled leaves. The tree without vertices
/// (no root) is the trivial tree with the single leaf 1.
///
/// Vertex ids are storage indices only; `same_structure` compares shape and labelling.
/// Vertices not reachable from the root are considered dead and are dropped by `compact`.
class Tree {
public:
    Tree() = default;
    static Tree trivial() { return {}; }
    static Tree corolla(std::size_t n);
    static Tree corolla_with_labels(const std::vector<std::size_t>& labels);

    bool is_trivial() const { return !root.has_value(); }
    std::size_t leaf_count() const;
    std::size_t vertex_count() const;  // reachable vertices

    /// External labels read left to right.
    std::vector<std::size_t> leaf_word() const;
    /// leaf_labeling()(p) is the external label of the p-th planar leaf.
    InjectiveMap leaf_labeling() const { return InjectiveMap::permutation(leaf_word()); }

    /// Depth-first, left-to-right preorder of reachable vertices.
    std::vector<VertexId> planar_traversal() const;

    struct ParentRef {
        VertexId vertex;
        std::size_t slot;  // 0-based
    };
    /// parent[v] for every stored vertex; empty for the root and dead vertices.
    std::vector<std::optional<ParentRef>> parents() const;

    /// Leaves of the subtree above vertex v, in planar order.
    std::vector<std::size_t> subtree_leaves(VertexId v) const;
    std::size_t min_leaf(VertexId v) const;

    /// Throws std::domain_error if the structure is not a tree with leaves labelled bijectively by 1..n.
    void validate() const;

    /// Preorder renumbering; old_to_new[v] is the new id or -1 for dead vertices.
    Tree compacted(std::vector<long>* old_to_new = nullptr) const;

    std::optional<VertexId> root;
    std::vector<Vertex> vertices;

    /// Storage-level comparison; meaningful between compacted trees.
    friend bool operator==(const Tree&, const Tree&) = default;
    friend auto operator<=>(const Tree&, const Tree&) = default;
};

/// Same shape and same leaf labelling, ignoring vertex ids.
bool same_structure(const Tree& a, const Tree& b);

/// Result of grafting: host vertices keep their ids, guest vertex g becomes g + guest_offset.
struct GraftResult {
    Tree tree;
    VertexId guest_offset = 0;
    /// Vertex whose slot received the guest, and that slot (0-based); absent if the host is trivial.
    std::optional<Tree::ParentRef> attach;
};

/// Replaces the leaf labelled `leaf_index` in host by the guest's root. Guest labels shift by
/// leaf_index-1, host labels greater than leaf_index shift by m-1. Throws std::domain_error on a bad index.
GraftResult graft(const Tree& host, std::size_t leaf_index, const Tree& guest);

/// Per surviving vertex: which vertex it came from and which of its slots survived.
struct DeletionRecord {
    VertexId old_vertex = 0;
    std::size_t old_arity = 0;
    std::vector<std::size_t> kept_slots;  // 1-based, ascending
    bool lost_slots() const { return kept_slots.size() != old_arity; }
    /// Order-preserving injection kept -> old slots, the map along which decorations restrict.
    InjectiveMap restriction() const { return InjectiveMap::from_image(kept_slots, old_arity); }
};

struct DeletionResult {
    Tree tree;                           // compacted, preorder ids
    std::vector<DeletionRecord> ledger;  // indexed by new VertexId
};

/// Λ-action at the tree level: keeps leaves u(1..m), renames leaf u(j) to j, removes vertices
/// all of whose inputs were removed. Throws std::domain_error if u.codomain() != leaf_count().
DeletionResult delete_leaves(const Tree& t, const InjectiveMap& u);

/// Gives the p-th leaf in planar order the label word[p-1].
void set_planar_leaf_labels(Tree& t, const std::vector<std::size_t>& word);
/// Relabels leaves by a bijection: leaf with label sigma(j) gets label j (the Σ part of u*).
Tree relabel_leaves(const Tree& t, const InjectiveMap& sigma);

/// Child order that sorts each vertex's slots by the minimal leaf label above them.
/// perms[v](j) = old slot index (1-based) of the new j-th slot.
std::vector<InjectiveMap> canonical_slot_order(const Tree& t);
/// Applies per-vertex slot permutations as produced by canonical_slot_order.
Tree permute_slots(const Tree& t, const std::vector<InjectiveMap>& perms);

/// Splices child slot `slot` of v into v (v's slot list absorbs the child's slots). The child becomes dead.
VertexId contract_edge(Tree& t, VertexId v, std::size_t slot);
/// Removes a unary vertex, reconnecting its unique input to its parent (or making it the root).
void remove_unary(Tree& t, VertexId v);

std::string to_string(const Tree& t);

}  // namespace opcalc
