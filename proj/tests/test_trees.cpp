#include "doctest.h"

#include "opcalc/random.hpp"
#include "opcalc/tree.hpp"

#include <numeric>

using namespace opcalc;

namespace {

Tree two_level() {
    Tree t;
    t.root = 0;
    t.vertices = {Vertex{{Slot::edge(1), Slot::edge(2)}}, Vertex{{Slot::leaf(1)}}, Vertex{{Slot::leaf(2)}}};
    return t;
}

// Block substitution of leaf words, computed without touching tree structure.
std::vector<std::size_t> substituted_word(const std::vector<std::size_t>& host, std::size_t i,
                                          const std::vector<std::size_t>& guest) {
    std::vector<std::size_t> out;
    for (auto l : host) {
        if (l == i)
            for (auto g : guest) out.push_back(g + i - 1);
        else
            out.push_back(l > i ? l + guest.size() - 1 : l);
    }
    return out;
}

// Leaf word after keeping u(1..m): planar order preserved, label u(j) renamed j.
std::vector<std::size_t> restricted_word(const std::vector<std::size_t>& word, const InjectiveMap& u) {
    std::vector<std::size_t> out;
    for (auto l : word)
        if (auto j = u.preimage(l)) out.push_back(j);
    return out;
}

}  // namespace

TEST_CASE("graft of two binary corollas") {
    auto g = graft(Tree::corolla(2), 1, Tree::corolla(2));
    CHECK(to_string(g.tree.compacted()) == "(v (v l1 l2) l3)");
    CHECK(g.tree.leaf_word() == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("graft onto a unary corolla adds a unary root") {
    Tree t = two_level();
    auto g = graft(Tree::corolla(1), 1, t).tree.compacted();
    CHECK(g.vertex_count() == t.vertex_count() + 1);
    CHECK(g.vertices[*g.root].arity() == 1);
    CHECK(to_string(g) == "(v " + to_string(t) + ")");
}

TEST_CASE("graft into a non-planar host follows block substitution") {
    auto host = Tree::corolla_with_labels({2, 1});
    auto g = graft(host, 1, Tree::corolla(2));
    CHECK(g.tree.leaf_word() == substituted_word({2, 1}, 1, {1, 2}));
    CHECK(g.tree.leaf_word() == std::vector<std::size_t>{3, 1, 2});
}

TEST_CASE("graft rejects a bad leaf index") {
    CHECK_THROWS_AS(graft(Tree::corolla(2), 3, Tree::corolla(2)), std::domain_error);
    CHECK_THROWS_AS(graft(Tree::corolla(2), 0, Tree::corolla(2)), std::domain_error);
}

TEST_CASE("graft leaf words agree with block substitution on random trees") {
    Rng rng(11);
    for (int k = 0; k < 300; ++k) {
        auto h = random_labelled_tree(rng, uniform(rng, 1, 5));
        auto g = random_labelled_tree(rng, uniform(rng, 1, 4));
        const auto i = uniform(rng, 1, h.leaf_count());
        auto r = graft(h, i, g).tree;
        r.validate();
        CHECK(r.leaf_word() == substituted_word(h.leaf_word(), i, g.leaf_word()));
    }
}

TEST_CASE("delete_leaves with the identity") {
    auto t = two_level();
    auto d = delete_leaves(t, InjectiveMap::identity(2));
    CHECK(same_structure(d.tree, t));
    for (const auto& rec : d.ledger) CHECK_FALSE(rec.lost_slots());
}

TEST_CASE("delete_leaves forgetting leaf 1 of a binary corolla") {
    auto d = delete_leaves(Tree::corolla(2), InjectiveMap({2}, 2));
    CHECK(to_string(d.tree) == "(v l1)");
    REQUIRE(d.ledger.size() == 1);
    CHECK(d.ledger[0].lost_slots());
    CHECK(d.ledger[0].kept_slots == std::vector<std::size_t>{2});
}

TEST_CASE("delete_leaves on the grafted tree leaves a unary lower vertex") {
    auto t = graft(Tree::corolla(2), 1, Tree::corolla(2)).tree.compacted();
    auto d = delete_leaves(t, InjectiveMap({1, 3}, 3));
    CHECK(to_string(d.tree) == "(v (v l1) l2)");
    REQUIRE(d.ledger.size() == 2);
    CHECK_FALSE(d.ledger[0].lost_slots());
    CHECK(d.ledger[1].kept_slots == std::vector<std::size_t>{1});
    CHECK(d.tree.leaf_word() == restricted_word(t.leaf_word(), InjectiveMap({1, 3}, 3)));
}

TEST_CASE("planar traversal") {
    CHECK(Tree::corolla(1).planar_traversal() == std::vector<VertexId>{0});
    CHECK(two_level().planar_traversal() == std::vector<VertexId>{0, 1, 2});
    // root with a leaf-only vertex on slot 1 and a ternary vertex on slot 2, read left to right
    Tree b2;
    b2.root = 2;
    b2.vertices = {Vertex{{Slot::leaf(4), Slot::leaf(5), Slot::leaf(6)}}, Vertex{{Slot::leaf(1), Slot::leaf(2), Slot::leaf(3)}},
                   Vertex{{Slot::edge(1), Slot::edge(0)}}};
    CHECK(b2.planar_traversal() == std::vector<VertexId>{2, 1, 0});
}

TEST_CASE("graft is associative at the tree level") {
    Rng rng(5);
    for (int k = 0; k < 500; ++k) {
        auto t = random_labelled_tree(rng, uniform(rng, 1, 4));
        auto s = random_labelled_tree(rng, uniform(rng, 1, 4));
        auto r = random_labelled_tree(rng, uniform(rng, 1, 3));
        const auto i = uniform(rng, 1, t.leaf_count());
        const auto j = uniform(rng, i, i + s.leaf_count() - 1);  // inside s
        auto lhs = graft(graft(t, i, s).tree, j, r).tree.compacted();
        auto rhs = graft(t, i, graft(s, j - i + 1, r).tree).tree.compacted();
        CHECK(same_structure(lhs, rhs));
    }
}

TEST_CASE("delete_leaves is functorial") {
    Rng rng(7);
    for (int k = 0; k < 500; ++k) {
        const auto n = uniform(rng, 1, 6);
        auto t = random_labelled_tree(rng, n);
        const auto a = uniform(rng, 1, n), b = uniform(rng, 1, a);
        auto u = random_injection(rng, a, n), v = random_injection(rng, b, a);
        auto once = delete_leaves(t, u.after(v)).tree;
        auto twice = delete_leaves(delete_leaves(t, u).tree, v).tree;
        CHECK(same_structure(once, twice));
        CHECK(once.leaf_word() == restricted_word(t.leaf_word(), u.after(v)));
    }
}

TEST_CASE("planar traversal depends only on shape") {
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        auto t = random_tree(rng, uniform(rng, 1, 6));
        auto relabelled = relabel_leaves(t, random_permutation(rng, t.leaf_count()));
        CHECK(t.planar_traversal() == relabelled.planar_traversal());
    }
}

TEST_CASE("injective maps") {
    InjectiveMap u({3, 1}, 4);
    CHECK_FALSE(u.order_preserving());
    auto [mono, perm] = u.factor();
    CHECK(mono.order_preserving());
    CHECK(perm.is_bijection());
    CHECK(mono.after(perm) == u);
    CHECK(u.preimage(1) == 2);
    CHECK(u.preimage(2) == 0);
    CHECK(all_injections(2, 3).size() == 6);
    CHECK(all_order_preserving(2, 4).size() == 6);
    CHECK_THROWS_AS(InjectiveMap({1, 1}, 2), std::domain_error);
    CHECK_THROWS_AS(InjectiveMap({3}, 2), std::domain_error);
}

TEST_CASE("tree validation") {
    Tree bad;
    bad.root = 0;
    bad.vertices = {Vertex{{Slot::leaf(1), Slot::leaf(1)}}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    Tree empty_vertex;
    empty_vertex.root = 0;
    empty_vertex.vertices = {Vertex{{}}};
    CHECK_THROWS_AS(empty_vertex.validate(), std::domain_error);
}
