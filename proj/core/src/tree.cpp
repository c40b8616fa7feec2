#include "opcalc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opcalc {

Tree Tree::corolla(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{1});
    return corolla_with_labels(labels);
}

Tree Tree::corolla_with_labels(const std::vector<std::size_t>& labels) {
    if (labels.empty()) throw std::domain_error("corolla needs at least one input");
    Tree t;
    Vertex v;
    for (auto l : labels) v.slots.push_back(Slot::leaf(l));
    t.vertices.push_back(std::move(v));
    t.root = 0;
    t.validate();
    return t;
}

std::vector<VertexId> Tree::planar_traversal() const {
    std::vector<VertexId> out;
    if (!root) return out;
    std::vector<VertexId> stack{*root};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        out.push_back(v);
        const auto& slots = vertices.at(v).slots;
        for (auto it = slots.rbegin(); it != slots.rend(); ++it)
            if (!it->is_leaf()) stack.push_back(static_cast<VertexId>(it->value));
    }
    return out;
}

std::vector<std::size_t> Tree::leaf_word() const {
    if (!root) return {1};
    return subtree_leaves(*root);
}

std::vector<std::size_t> Tree::subtree_leaves(VertexId v) const {
    std::vector<std::size_t> out;
    std::vector<std::pair<VertexId, std::size_t>> stack{{v, 0}};
    while (!stack.empty()) {
        auto& [u, i] = stack.back();
        const auto& slots = vertices.at(u).slots;
        if (i == slots.size()) {
            stack.pop_back();
            continue;
        }
        const Slot s = slots[i++];
        if (s.is_leaf())
            out.push_back(s.value);
        else
            stack.emplace_back(static_cast<VertexId>(s.value), 0);
    }
    return out;
}

std::size_t Tree::min_leaf(VertexId v) const {
    auto leaves = subtree_leaves(v);
    return *std::min_element(leaves.begin(), leaves.end());
}

std::size_t Tree::leaf_count() const { return root ? subtree_leaves(*root).size() : 1; }

std::size_t Tree::vertex_count() const { return planar_traversal().size(); }

std::vector<std::optional<Tree::ParentRef>> Tree::parents() const {
    std::vector<std::optional<ParentRef>> out(vertices.size());
    for (VertexId v : planar_traversal()) {
        const auto& slots = vertices[v].slots;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (!slots[i].is_leaf()) out.at(slots[i].value) = ParentRef{v, i};
    }
    return out;
}

void Tree::validate() const {
    if (!root) return;
    if (*root >= vertices.size()) throw std::domain_error("tree root out of range");
    std::vector<int> visits(vertices.size(), 0);
    std::vector<std::size_t> labels;
    std::vector<VertexId> stack{*root};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (++visits[v] > 1) throw std::domain_error("tree has a cycle or shared vertex");
        if (vertices[v].slots.empty()) throw std::domain_error("tree vertex without inputs");
        for (const auto& s : vertices[v].slots) {
            if (s.is_leaf()) {
                labels.push_back(s.value);
            } else {
                if (s.value >= vertices.size()) throw std::domain_error("edge to missing vertex");
                stack.push_back(static_cast<VertexId>(s.value));
            }
        }
    }
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != i + 1) throw std::domain_error("leaf labels are not a permutation of 1..n");
}

Tree Tree::compacted(std::vector<long>* old_to_new) const {
    std::vector<long> map(vertices.size(), -1);
    const auto order = planar_traversal();
    for (std::size_t i = 0; i < order.size(); ++i) map[order[i]] = static_cast<long>(i);
    Tree out;
    if (root) out.root = 0;
    out.vertices.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = vertices[order[i]];
        for (auto& s : v.slots)
            if (!s.is_leaf()) s.value = static_cast<std::size_t>(map[s.value]);
        out.vertices[i] = std::move(v);
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

bool same_structure(const Tree& a, const Tree& b) {
    const Tree ca = a.compacted(), cb = b.compacted();
    return ca.root == cb.root && ca.vertices == cb.vertices;
}

GraftResult graft(const Tree& host, std::size_t leaf_index, const Tree& guest) {
    const std::size_t n = host.leaf_count();
    const std::size_t m = guest.leaf_count();
    if (leaf_index < 1 || leaf_index > n)
        throw std::domain_error("graft: leaf index " + std::to_string(leaf_index) + " outside [1," +
                                std::to_string(n) + "]");
    GraftResult r;
    r.guest_offset = static_cast<VertexId>(host.vertices.size());
    auto shift_guest = [&](std::size_t l) { return l + leaf_index - 1; };
    auto shift_host = [&](std::size_t l) { return l > leaf_index ? l + m - 1 : l; };

    if (host.is_trivial()) {
        r.tree = guest;
        r.guest_offset = 0;
        for (auto& v : r.tree.vertices)
            for (auto& s : v.slots)
                if (s.is_leaf()) s.value = shift_guest(s.value);
        return r;
    }
    r.tree = host;
    for (auto v : host.planar_traversal())
        for (std::size_t i = 0; i < host.vertices[v].slots.size(); ++i) {
            auto& s = r.tree.vertices[v].slots[i];
            if (!s.is_leaf()) continue;
            if (s.value == leaf_index) {
                r.attach = Tree::ParentRef{v, i};
            } else {
                s.value = shift_host(s.value);
            }
        }
    for (const auto& gv : guest.vertices) {
        Vertex nv = gv;
        for (auto& s : nv.slots)
            s.value = s.is_leaf() ? shift_guest(s.value) : s.value + r.guest_offset;
        r.tree.vertices.push_back(std::move(nv));
    }
    auto& target = r.tree.vertices[r.attach->vertex].slots[r.attach->slot];
    if (guest.is_trivial())
        target = Slot::leaf(leaf_index);
    else
        target = Slot::edge(*guest.root + r.guest_offset);
    return r;
}

DeletionResult delete_leaves(const Tree& t, const InjectiveMap& u) {
    const std::size_t n = t.leaf_count();
    if (u.codomain() != n)
        throw std::domain_error("delete_leaves: map codomain " + std::to_string(u.codomain()) +
                                " differs from leaf count " + std::to_string(n));
    DeletionResult out;
    if (t.is_trivial()) return out;  // u = id_1

    // alive[v]: some leaf above v survives
    std::vector<bool> alive(t.vertices.size(), false);
    const auto order = t.planar_traversal();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        bool any = false;
        for (const auto& s : t.vertices[*it].slots)
            any = any || (s.is_leaf() ? u.preimage(s.value) != 0 : alive[s.value]);
        alive[*it] = any;
    }
    std::vector<long> new_id(t.vertices.size(), -1);
    for (auto v : order)
        if (alive[v]) {
            new_id[v] = static_cast<long>(out.ledger.size());
            out.ledger.push_back({v, t.vertices[v].arity(), {}});
        }
    out.tree.vertices.resize(out.ledger.size());
    out.tree.root = 0;
    for (std::size_t nv = 0; nv < out.ledger.size(); ++nv) {
        auto& rec = out.ledger[nv];
        const auto& slots = t.vertices[rec.old_vertex].slots;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const Slot& s = slots[i];
            if (s.is_leaf()) {
                if (auto j = u.preimage(s.value)) {
                    rec.kept_slots.push_back(i + 1);
                    out.tree.vertices[nv].slots.push_back(Slot::leaf(j));
                }
            } else if (alive[s.value]) {
                rec.kept_slots.push_back(i + 1);
                out.tree.vertices[nv].slots.push_back(Slot::edge(static_cast<VertexId>(new_id[s.value])));
            }
        }
    }
    return out;
}

Tree relabel_leaves(const Tree& t, const InjectiveMap& sigma) {
    if (!sigma.is_bijection() || sigma.codomain() != t.leaf_count())
        throw std::domain_error("relabel_leaves needs a bijection of the leaves");
    Tree out = t;
    for (auto& v : out.vertices)
        for (auto& s : v.slots)
            if (s.is_leaf()) s.value = sigma.preimage(s.value);
    return out;
}

std::vector<InjectiveMap> canonical_slot_order(const Tree& t) {
    std::vector<InjectiveMap> perms(t.vertices.size());
    const auto order = t.planar_traversal();
    std::vector<std::size_t> minleaf(t.vertices.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& slots = t.vertices[*it].slots;
        std::vector<std::pair<std::size_t, std::size_t>> keyed;  // (min leaf, old slot)
        for (std::size_t i = 0; i < slots.size(); ++i)
            keyed.emplace_back(slots[i].is_leaf() ? slots[i].value : minleaf[slots[i].value], i + 1);
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::size_t> word;
        for (auto& k : keyed) word.push_back(k.second);
        minleaf[*it] = keyed.front().first;
        perms[*it] = InjectiveMap::permutation(std::move(word));
    }
    return perms;
}

Tree permute_slots(const Tree& t, const std::vector<InjectiveMap>& perms) {
    Tree out = t;
    for (auto v : t.planar_traversal()) {
        const auto& p = perms.at(v);
        auto& slots = out.vertices[v].slots;
        for (std::size_t j = 1; j <= slots.size(); ++j) slots[j - 1] = t.vertices[v].slots[p(j) - 1];
    }
    return out;
}

VertexId contract_edge(Tree& t, VertexId v, std::size_t slot) {
    auto& slots = t.vertices.at(v).slots;
    const Slot s = slots.at(slot);
    if (s.is_leaf()) throw std::domain_error("contract_edge: slot is a leaf");
    const auto child = static_cast<VertexId>(s.value);
    std::vector<Slot> merged(slots.begin(), slots.begin() + static_cast<long>(slot));
    const auto& cs = t.vertices[child].slots;
    merged.insert(merged.end(), cs.begin(), cs.end());
    merged.insert(merged.end(), slots.begin() + static_cast<long>(slot) + 1, slots.end());
    slots = std::move(merged);
    t.vertices[child].slots.clear();
    return child;
}

void remove_unary(Tree& t, VertexId v) {
    if (t.vertices.at(v).arity() != 1) throw std::domain_error("remove_unary: vertex is not unary");
    const Slot in = t.vertices[v].slots[0];
    if (t.root == v) {
        if (in.is_leaf())
            t.root.reset();
        else
            t.root = static_cast<VertexId>(in.value);
    } else {
        auto parents = t.parents();
        const auto& p = parents.at(v);
        if (!p) throw std::domain_error("remove_unary: vertex is not reachable");
        t.vertices[p->vertex].slots[p->slot] = in;
    }
    t.vertices[v].slots.clear();
    if (!t.root) t.vertices.clear();
}

void set_planar_leaf_labels(Tree& t, const std::vector<std::size_t>& word) {
    if (t.is_trivial()) return;
    std::size_t p = 0;
    auto rec = [&](auto&& self, VertexId v) -> void {
        for (auto& s : t.vertices[v].slots) {
            if (s.is_leaf())
                s.value = word.at(p++);
            else
                self(self, static_cast<VertexId>(s.value));
        }
    };
    rec(rec, *t.root);
}

std::string to_string(const Tree& t) {
    if (t.is_trivial()) return "l1";
    std::string out;
    auto rec = [&](auto&& self, VertexId v) -> void {
        out += "(v";
        for (const auto& s : t.vertices[v].slots) {
            out += ' ';
            if (s.is_leaf())
                out += "l" + std::to_string(s.value);
            else
                self(self, static_cast<VertexId>(s.value));
        }
        out += ')';
    };
    rec(rec, *t.root);
    return out;
}

}  // namespace opcalc
