#include "doctest.h"

#include "opcalc/mapping.hpp"
#include "opcalc/operads/little_discs.hpp"
#include "opcalc/operads/little_intervals.hpp"

using namespace opcalc;

namespace {

using BD1 = BModule<LittleIntervals>;
using WE = BD1::WElement;
using BE = BD1::Element;
using Map = OperadMap<WE, IntervalConfig>;
using Family = PointedMapFamily<WE, IntervalConfig>;
using Hofiber = HofiberPoint<WE, IntervalConfig>;
using Raw = BD1::Raw;
using V = BVertex<IntervalConfig>;

const LittleIntervals d1;
const BD1 b;
const auto& w = b.w();

IntervalConfig cfg(std::initializer_list<std::pair<Rational, Rational>> xs) {
    IntervalConfig c;
    for (auto& [lo, hi] : xs) c.intervals.push_back({lo, hi});
    return c;
}

const IntervalConfig a2 = cfg({{0, Rational(1, 3)}, {Rational(2, 3), 1}});
const IntervalConfig b2 = cfg({{Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), 1}});
const IntervalConfig c3 = cfg({{0, Rational(1, 4)}, {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), 1}});

const Map delta_star = eta_mu(w, [](const IntervalConfig& c) { return c; }, "eta_mu");
const Map mirrored = then(delta_star, [](const IntervalConfig& c) { return mirror(c); }, "mirror");
const Family family{PointedSet{{"*", "m"}}, {delta_star, mirrored}};

// Longhand affine substitution for x ∘ᵢ y.
IntervalConfig substitute(const IntervalConfig& x, std::size_t i, const IntervalConfig& y) {
    IntervalConfig out;
    for (std::size_t k = 0; k < x.arity(); ++k) {
        if (k + 1 != i) {
            out.intervals.push_back(x.intervals[k]);
            continue;
        }
        for (const auto& iv : y.intervals)
            out.intervals.push_back({x.intervals[k].at(iv.lo), x.intervals[k].at(iv.hi)});
    }
    return out;
}

Raw two_vertex(const WE& x, const Rational& h, std::size_t slot, const WE& y, const Rational& k) {
    Raw r;
    r.tree.root = 0;
    std::size_t leaf = 1;
    std::vector<Slot> rs;
    for (std::size_t s = 1; s <= x.arity(); ++s) {
        if (s == slot) {
            rs.push_back(Slot::edge(1));
            leaf += y.arity();
        } else {
            rs.push_back(Slot::leaf(leaf++));
        }
    }
    std::vector<Slot> cs;
    for (std::size_t j = 0; j < y.arity(); ++j) cs.push_back(Slot::leaf(slot + j));
    r.tree.vertices = {Vertex{rs}, Vertex{cs}};
    r.at = {V{x, h}, V{y, k}};
    return r;
}

void require_pass(const CheckReport& r) {
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK_FALSE(r.vacuous());
}

}  // namespace

TEST_CASE("right action on Q∘X twists by the tag") {
    const FiberBundleBimodule<LittleIntervals, WE> qx(d1, family);
    const auto p = w.corolla(a2);
    const Tagged<IntervalConfig> q{cfg({{Rational(1, 4), Rational(3, 4)}}), {1}};
    const auto r = qx.right(q, 1, p);
    CHECK(r.value == d1.compose(q.value, 1, mirror(a2)));
    CHECK(r.tags == std::vector<std::size_t>{1, 1});
    CHECK(qx.right(q, 1, w.unit()) == q);
    const Tagged<IntervalConfig> base{q.value, {0}};
    CHECK(qx.right(base, 1, p).value == d1.compose(q.value, 1, a2));
}

TEST_CASE("left action on Q∘X goes through the basepoint map") {
    const FiberBundleBimodule<LittleIntervals, WE> qx(d1, family);
    const Tagged<IntervalConfig> u{b2, {1, 0}}, v{c3, {0, 1, 1}};
    CHECK(qx.left(w.unit(), {u}) == u);
    const auto r = qx.left(w.corolla(a2), {u, v});
    CHECK(r.value == substitute(substitute(a2, 2, c3), 1, b2));
    CHECK(r.tags == std::vector<std::size_t>{1, 0, 0, 1, 1});
}

TEST_CASE("twisted bimodules satisfy the bimodule axioms") {
    require_pass(check_bimodule_axioms(w, make_qx_bimodule(d1, family, 0), 200, 301));
    require_pass(check_bimodule_axioms(w, make_qx_bimodule(d1, family, 1), 200, 302));
    require_pass(check_bimodule_axioms(w, FiberBundleBimodule<LittleIntervals, WE>(d1, family), 200, 303));
    Rng rng(5);
    const auto qx = make_qx_bimodule(d1, family, 1);
    const FiberBundleBimodule<LittleIntervals, WE> bundle(d1, family);
    for (int k = 0; k < 50; ++k) {
        const auto q = d1.sample(rng, 2);
        const auto p = w.sample(rng, 2);
        CHECK(qx.right(q, 2, p) == bundle.right({q, {1, 1}}, 2, p).value);
    }
}

TEST_CASE("operad maps and paths") {
    require_pass(check_operad_map(w, d1, delta_star, 300, 311));
    require_pass(check_operad_map(w, d1, mirrored, 300, 312));
    require_pass(check_path(w, d1, constant_path(delta_star), delta_star, delta_star, 200, 313));
    const auto through = piecewise_path<WE, IntervalConfig>({delta_star, mirrored}, {Rational(1, 2)});
    require_pass(check_path(w, d1, through, delta_star, mirrored, 200, 314));

    // declared to end at δ_* but ends at the mirror map
    const auto bad = check_path(w, d1, through, delta_star, delta_star, 200, 315);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.at("end").passed());
    CHECK_FALSE(bad.at("end").witness.empty());
    CHECK(bad.at("start").passed());
    CHECK(bad.at("compose").passed());
}

TEST_CASE("a map that is not Λ-compatible is caught") {
    const Map broken{"broken", [](const WE& y) {
                         auto c = w.mu(y);
                         if (c.arity() == 2) std::swap(c.intervals[0], c.intervals[1]);
                         return c;
                     }};
    const auto rep = check_operad_map(w, d1, broken, 200, 316);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("xi at the constant loop is eta mu mu'") {
    Rng rng(7);
    const auto loop = constant_path(delta_star);
    for (int k = 0; k < 200; ++k) {
        const auto x = b.sample(rng, uniform(rng, 1, 4));
        CHECK(xi_eval(d1, delta_star, loop, x) == w.mu(b.mu_prime(x)));
    }
}

TEST_CASE("xi rejects a path that is not a loop") {
    const auto open = piecewise_path<WE, IntervalConfig>({delta_star, mirrored}, {Rational(1, 2)});
    const auto top = b.right(b.corolla(w.corolla(a2), Rational(1, 2)), 1, w.corolla(b2));
    CHECK_THROWS_AS(xi_eval(d1, delta_star, open, top), std::domain_error);
}

TEST_CASE("xi at sampled loops is a bimodule map") {
    Rng rng(11);
    const auto target = make_qx_bimodule(d1, family, 0);
    for (int k = 0; k < 10; ++k) {
        const auto loop = random_hofiber_point(rng, family, 3, std::size_t{0}).g;
        const BimoduleMap<BE, IntervalConfig> f{"xi", [&](const BE& x) { return xi_eval(d1, delta_star, loop, x); }};
        require_pass(check_bimodule_map(b, target, f, 30, 400 + k));
    }
}

TEST_CASE("psi' keeps the point of X and is a bimodule map to Q_x") {
    Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        const auto h = random_hofiber_point(rng, family);
        const auto x = b.sample(rng, uniform(rng, 1, 4));
        CHECK(psi_prime_eval(d1, family, h, x).first == h.x);
    }
    for (int k = 0; k < 10; ++k) {
        const auto h = random_hofiber_point(rng, family);
        require_pass(check_bimodule_map(b, make_qx_bimodule(d1, family, h.x), psi_prime(d1, family, h), 30, 500 + k));
    }
}

TEST_CASE("psi' at the basepoint with the constant path is xi of the constant loop") {
    Rng rng(17);
    const Hofiber h{0, constant_path(delta_star)};
    for (int k = 0; k < 100; ++k) {
        const auto x = b.sample(rng, uniform(rng, 1, 4));
        CHECK(psi_prime_eval(d1, family, h, x).second == xi_eval(d1, delta_star, h.g, x));
    }
}

TEST_CASE("height-1 vertices evaluate through delta_x") {
    Rng rng(19);
    for (int k = 0; k < 100; ++k) {
        const auto h = random_hofiber_point(rng, family, 2, std::size_t{1});
        const auto x = b.sample(rng, uniform(rng, 1, 3));
        const auto p = w.sample(rng, uniform(rng, 1, 3));
        const auto i = uniform(rng, 1, x.arity());
        const auto lhs = psi_prime_eval(d1, family, h, b.right(x, i, p)).second;
        CHECK(lhs == d1.compose(psi_prime_eval(d1, family, h, x).second, i, mirror(w.mu(p))));
    }
}

TEST_CASE("psi' rejects a path whose end is not delta_x") {
    const Hofiber wrong{1, constant_path(delta_star)};
    const auto top = b.right(b.corolla(w.corolla(a2), Rational(1, 2)), 1, w.corolla(b2));
    try {
        psi_prime_eval(d1, family, wrong, top);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("g(y, 1)") != std::string::npos);
    }
}

TEST_CASE("psi'' lands in bimodule maps to Q∘X") {
    Rng rng(23);
    const FiberBundleBimodule<LittleIntervals, WE> bundle(d1, family);
    for (int k = 0; k < 10; ++k) {
        const auto h = random_hofiber_point(rng, family);
        const auto f = psi_double_prime<BE, IntervalConfig>(h.x, psi_prime(d1, family, h),
                                                             [](const IntervalConfig& c) { return c.arity(); });
        require_pass(check_bimodule_map(b, bundle, f, 30, 600 + k));
        const auto x = b.sample(rng, 2);
        CHECK(f(x).tags == std::vector<std::size_t>(2, h.x));
    }
    const auto base = psi_double_prime<BE, IntervalConfig>(0, psi_prime(d1, family, Hofiber{0, constant_path(delta_star)}),
                                                           [](const IntervalConfig& c) { return c.arity(); });
    CHECK(base(b.unit()) == Tagged<IntervalConfig>{d1.unit(), {0}});
}

TEST_CASE("evaluation does not depend on the representative") {
    Rng rng(29);
    for (int k = 0; k < 200; ++k) {
        const auto h = random_hofiber_point(rng, family);
        const auto raw = b.sample_raw(rng, uniform(rng, 1, 4));
        const auto x = b.normalize(raw);
        const auto presented = b.random_presentation(rng, x, 3);
        const auto value = psi_prime_eval(d1, family, h, x).second;
        auto label = [&](const V& v) { return h.g(v.label, v.height); };
        CHECK(evaluate_vertexwise(d1, BE{raw}, label) == value);
        CHECK(evaluate_vertexwise(d1, BE{presented}, label) == value);
    }
}

TEST_CASE("path lifting") {
    Rng rng(31);
    // parameters are hofiber points; f0 evaluates psi' and g moves along a two-piece path in X
    auto f0 = [&](const Hofiber& h, const BE& x) { return psi_prime_eval(d1, family, h, x).second; };
    auto g = [](const Hofiber& h, const Rational& s) -> std::size_t { return s < Rational(1, 2) ? h.x : 1; };

    for (int k = 0; k < 200; ++k) {
        const auto h = random_hofiber_point(rng, family);
        const auto x = b.sample(rng, uniform(rng, 1, 4));
        const auto lifted = lift_path(b, d1, family, f0, g, h, Rational(0), x);
        CHECK(lifted.first == h.x);
        CHECK(lifted.second == f0(h, x));
    }

    // one vertex at height 1/2 and t = 1: the cut is at 1/2, the vertex stays below at rescaled height 1
    BE seen;
    auto record = [&](const Hofiber&, const BE& x) {
        seen = x;
        return b.mu_prime(x).arity() ? w.mu(b.mu_prime(x)) : d1.unit();
    };
    const Hofiber h0{0, constant_path(delta_star)};
    const auto single = b.corolla(w.corolla(a2), Rational(1, 2));
    const auto out = lift_path(b, d1, family, record, g, h0, Rational(1), single);
    REQUIRE(seen.t.tree.vertex_count() == 1);
    CHECK(seen.t.at[0].height == Rational(1));
    CHECK(out.first == 1);
    CHECK(out.second == a2);

    // two levels straddling the cut at 3/4 (t = 1/2): the upper vertex at 7/8 maps through δ_{g(x, 1/4)} = δ_*,
    // the one at 1 (t = 1) would map through δ_m
    const auto straddle = b.normalize(two_vertex(w.corolla(a2), Rational(1, 2), 2, w.corolla(b2), Rational(7, 8)));
    const auto lower_half = lift_path(b, d1, family, record, g, h0, Rational(1, 2), straddle);
    REQUIRE(seen.t.tree.vertex_count() == 1);
    CHECK(seen.t.at[0].height == Rational(2, 3));
    CHECK(lower_half.second == d1.compose(a2, 2, b2));
    const auto high = b.normalize(two_vertex(w.corolla(a2), Rational(1, 2), 2, w.corolla(b2), Rational(1)));
    const auto at_one = lift_path(b, d1, family, record, g, h0, Rational(1), high);
    CHECK(at_one.second == d1.compose(a2, 2, mirror(b2)));
    CHECK_THROWS_AS(lift_path(b, d1, family, record, g, h0, Rational(3, 2), high), std::domain_error);
}

TEST_CASE("rotations of the little discs") {
    const LittleDiscs d2;
    const BModule<LittleDiscs> bd2;
    using WE2 = BModule<LittleDiscs>::WElement;
    const OperadMap<WE2, DiscConfig> star = eta_mu(bd2.w(), [](const DiscConfig& c) { return c; });
    std::vector<OperadMap<WE2, DiscConfig>> maps{star};
    for (int k = 1; k < 4; ++k)
        maps.push_back(then(maps.back(), [](const DiscConfig& c) { return rotate_quarter(c); }, "r" + std::to_string(k)));
    const PointedMapFamily<WE2, DiscConfig> rot{PointedSet{{"*", "r1", "r2", "r3"}}, maps};
    for (std::size_t x = 1; x < 4; ++x) require_pass(check_operad_map(bd2.w(), d2, rot(x), 100, 700 + x));
    Rng rng(37);
    for (int k = 0; k < 5; ++k) {
        const auto h = random_hofiber_point(rng, rot);
        require_pass(check_bimodule_map(bd2, make_qx_bimodule(d2, rot, h.x), psi_prime(d2, rot, h), 20, 710 + k));
    }
}
