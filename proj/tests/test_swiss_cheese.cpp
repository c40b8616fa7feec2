#include "doctest.h"

#include "opcalc/swiss_cheese.hpp"

#include <map>

using namespace opcalc;

namespace {

using BD1 = BModule<LittleIntervals>;
using WE = BD1::WElement;
using BE = BD1::Element;
using IC = IntervalConfig;
using Map = OperadMap<WE, IC>;
using Family = PointedMapFamily<WE, IC>;
using Path = PathOfMaps<WE, IC>;
using Hofiber = HofiberPoint<WE, IC>;
using Closed = BimoduleMap<BE, IC>;
using Open = BimoduleMap<BE, Tagged<IC>>;

const LittleIntervals d1;
const BD1 b;
const auto& w = b.w();

const Map delta_star = eta_mu(w, [](const IC& c) { return c; }, "eta_mu");
const Map mirrored = then(delta_star, [](const IC& c) { return mirror(c); }, "mirror");
const Family family{PointedSet{{"*", "m"}}, {delta_star, mirrored}};
const Family point{PointedSet{{"*"}}, {delta_star}};

IC cfg(std::initializer_list<std::pair<Rational, Rational>> xs) {
    IC c;
    for (auto& [lo, hi] : xs) c.intervals.push_back({lo, hi});
    return c;
}

SC1Element open(std::initializer_list<std::pair<Rational, Rational>> xs) { return {Colour::Open, cfg(xs)}; }
SC1Element closed(std::initializer_list<std::pair<Rational, Rational>> xs) { return {Colour::Closed, cfg(xs)}; }

Closed xi_map(const Path& loop) {
    return {"xi(" + loop.name + ")", [loop](const BE& y) { return xi_eval(d1, delta_star, loop, y); }};
}

Open psi_map(const Hofiber& h, const Family& fam = family) {
    return psi_double_prime<BE, IC>(h.x, psi_prime(d1, fam, h), [](const IC& c) { return c.arity(); });
}

Path random_loop(Rng& rng) { return random_hofiber_point(rng, family, 2, std::size_t{0}).g; }

// Five vertices: x1 in c1, x2 in the gap h1, x3 and x4 (one piece z) and x5 in c2.
const char* const five_text =
    "(v:h=3/10 {(v [0,1/3;2/3,1] l1 l2)} "
    "(v:h=1/2 {(v [0,1/3;2/3,1] l1 l2)} "
    "(v:h=7/10 {(v [0,1/3;2/3,1] l1 l2)} (v:h=4/5 {(v [0,1/3;2/3,1] l1 l2)} l1 l2) l3) l4) "
    "(v:h=9/10 {(v [0,1/3;2/3,1] l1 l2)} l5 l6))";
const SC1Element five_config = open({{Rational(1, 5), Rational(2, 5)}, {Rational(3, 5), 1}});

std::size_t vertex_count(const BE& x) { return x.t.tree.is_trivial() ? 0 : x.t.tree.vertex_count(); }

}  // namespace

TEST_CASE("gaps between discs") {
    const auto g = gaps(open({{Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), 1}}));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Interval{0, Rational(1, 4)});
    CHECK(g[1] == Interval{Rational(1, 2), Rational(3, 4)});

    const auto single = gaps(open({{Rational(2, 3), 1}}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Interval{0, Rational(2, 3)});

    const auto touching = gaps(closed({{0, Rational(1, 2)}, {Rational(1, 2), 1}}));
    REQUIRE(touching.size() == 3);
    CHECK(touching[1].lo == touching[1].hi);

    // gaps follow position, not labels
    const auto swapped = gaps(closed({{Rational(1, 2), Rational(3, 4)}, {Rational(1, 8), Rational(1, 4)}}));
    CHECK(swapped[1] == Interval{Rational(1, 4), Rational(1, 2)});
    CHECK(swapped[2] == Interval{Rational(3, 4), 1});
    CHECK(regions(closed({{Rational(1, 2), Rational(3, 4)}, {Rational(1, 8), Rational(1, 4)}}))[1].index == 2);
}

TEST_CASE("SC1 elements are validated") {
    CHECK_THROWS_AS(open({{0, Rational(1, 2)}}).validate(), std::domain_error);
    CHECK_THROWS_AS(gaps(SC1Element{Colour::Closed, {}}), std::domain_error);
    CHECK_THROWS_AS(sc1_compose(open({{0, 1}}), 1, closed({{0, 1}})), std::domain_error);
    CHECK_THROWS_AS(sc1_compose(open({{0, Rational(1, 2)}, {Rational(3, 4), 1}}), 1, open({{0, 1}})), std::domain_error);
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto n = uniform(rng, 0, 3);
        const auto c = random_sc1(rng, n, Colour::Open);
        CHECK_NOTHROW(c.validate());
        CHECK(c.closed_inputs() == n);
        if (n > 0) CHECK_NOTHROW(random_sc1(rng, n, Colour::Closed).validate());
    }
}

TEST_CASE("subpoints of the five-vertex example") {
    const auto y = b.parse(five_text);
    const auto pieces = extract_subpoints(y, five_config);
    REQUIRE(pieces.size() == 4);
    // h0: the root stub; c1: x1; h1: x2 and the strand to x5; c2: z, the leaf stub of x2, x5
    CHECK(pieces[0].size() == 1);
    CHECK(pieces[0][0].body.is_unit());
    REQUIRE(pieces[1].size() == 1);
    CHECK(pieces[1][0].body.t.at[0].height == Rational(3, 10));
    REQUIRE(pieces[2].size() == 2);
    CHECK(vertex_count(pieces[2][0].body) == 1);
    CHECK(pieces[2][1].body.is_unit());
    REQUIRE(pieces[3].size() == 3);
    CHECK(vertex_count(pieces[3][0].body) == 2);
    CHECK(pieces[3][0].body.arity() == 3);
    CHECK(pieces[3][1].body.is_unit());
    CHECK(vertex_count(pieces[3][2].body) == 1);
}

TEST_CASE("subpoints partition the vertices and match arities") {
    Rng rng(5);
    for (int k = 0; k < 300; ++k) {
        const auto y = b.sample(rng, uniform(rng, 1, 5));
        const auto c = random_sc1(rng, uniform(rng, 0, 2), Colour::Open);
        const auto rs = regions(c);
        const auto pieces = extract_subpoints(y, c);
        std::size_t total = 0;
        std::size_t exits = pieces[0].size();
        CHECK(exits == 1);
        for (std::size_t r = 0; r < rs.size(); ++r) {
            std::size_t inputs = 0;
            CHECK(pieces[r].size() == exits);
            for (const auto& s : pieces[r]) {
                total += vertex_count(s.body);
                inputs += s.body.arity();
                for (const auto& v : s.body.t.at) CHECK(rs[r].contains(v.height));
            }
            exits = inputs;
        }
        CHECK(exits == y.arity());
        CHECK(total == vertex_count(y));
    }
}

TEST_CASE("subpoints do not raise the filtration level") {
    Rng rng(7);
    for (int k = 0; k < 300; ++k) {
        const auto y = b.sample(rng, uniform(rng, 1, 5));
        const auto c = random_sc1(rng, uniform(rng, 0, 2), Colour::Open);
        const auto level = b.filtration_level(y).first;
        const auto rs = regions(c);
        const auto pieces = extract_subpoints(y, c);
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (const auto& s : pieces[r]) {
                CHECK(b.filtration_level(s.body).first <= level);
                if (!rs[r].gap) CHECK(b.filtration_level(rescale(rs[r], s.body)).first <= level);
            }
    }
}

TEST_CASE("rescaling along a disc") {
    const auto x = b.corolla(w.corolla(cfg({{0, Rational(1, 2)}, {Rational(1, 2), 1}})), Rational(3, 4));
    CHECK(rescale(Interval{0, 1}, x, true) == x);
    CHECK(rescale(Interval{Rational(1, 2), 1}, x, true).t.at[0].height == Rational(1, 2));
    CHECK(rescale(Interval{Rational(1, 2), 1}, b.unit()) == b.unit());
    CHECK_THROWS_AS(rescale(Interval{0, Rational(1, 2)}, x), std::domain_error);
    // the disc is open at its top unless it is the open input
    const auto at_one = b.corolla(w.corolla(cfg({{0, Rational(1, 2)}, {Rational(1, 2), 1}})), Rational(1));
    CHECK_THROWS_AS(rescale(Interval{Rational(1, 2), 1}, at_one), std::domain_error);
    CHECK(rescale(Interval{Rational(1, 2), 1}, at_one, true).t.at[0].height == Rational(1));
}

TEST_CASE("formal assembly of the five-vertex example") {
    const auto y = b.parse(five_text);
    const std::map<Rational, std::string> names{{Rational(3, 10), "x1;t1"},
                                                 {Rational(1, 2), "x2"},
                                                 {Rational(7, 10), "z1^2"},
                                                 {Rational(9, 10), "x5;t5"}};
    std::function<std::string(const BE&)> name = [&](const BE& s) { return names.at(s.t.at[*s.t.tree.root].height); };
    CHECK(alpha_display(y, five_config, name) ==
          "(f1(c1*(x1;t1))(eta_mu(x2), *1'))(f2(c2*(z1^2)), f2(iota(*1)), f2(c2*(x5;t5)))");
}

TEST_CASE("alpha on the five-vertex example by hand") {
    Rng rng(11);
    const auto y = b.parse(five_text);
    const auto pieces = extract_subpoints(y, five_config);
    const auto rs = regions(five_config);
    for (int k = 0; k < 20; ++k) {
        const auto f1 = xi_map(random_loop(rng));
        const auto h = random_hofiber_point(rng, family);
        const auto f2 = psi_map(h);
        const auto lower = d1.compose(f1(rescale(rs[1], pieces[1][0].body)), 2, d1.unit());
        const auto middle = gamma(d1, lower, std::vector<IC>{delta_star(b.mu_prime(pieces[2][0].body)), d1.unit()});
        const auto top = gamma(d1, middle,
                               std::vector<IC>{f2(rescale(rs[3], pieces[3][0].body)).value, f2(b.unit()).value,
                                               f2(rescale(rs[3], pieces[3][2].body)).value});
        const auto value = alpha_eval(b, d1, delta_star, five_config, {f1}, f2, y);
        CHECK(value.value == top);
        CHECK(value.tags == std::vector<std::size_t>(6, h.x));
    }
}

TEST_CASE("alpha with everything in the open disc") {
    Rng rng(13);
    const auto c = open({{0, Rational(1, 4)}, {Rational(1, 2), 1}});
    for (int k = 0; k < 100; ++k) {
        auto raw = b.sample_raw(rng, uniform(rng, 1, 4));
        for (auto& v : raw.at) v.height = Rational(1, 2) + (v.height + Rational(1)) / 4;
        const auto y = b.normalize(raw);
        const auto h = random_hofiber_point(rng, family);
        const auto f = psi_map(h);
        CHECK(alpha_eval(b, d1, delta_star, c, {xi_map(random_loop(rng))}, f, y) == f(rescale(regions(c).back(), y)));
    }
}

TEST_CASE("unit configurations act trivially") {
    Rng rng(17);
    const auto unit_open = open({{0, 1}});
    const auto unit_closed = closed({{0, 1}});
    for (int k = 0; k < 200; ++k) {
        const auto y = b.sample(rng, uniform(rng, 1, 4));
        const auto f = psi_map(random_hofiber_point(rng, family));
        CHECK(alpha_eval(b, d1, delta_star, unit_open, {}, f, y) == f(y));
        const auto g = xi_map(random_loop(rng));
        CHECK(d1_action_eval(b, d1, delta_star, unit_closed, {g}, y) == g(y));
    }
    CHECK_THROWS_AS(d1_action_eval(b, d1, delta_star, SC1Element{Colour::Closed, {}}, {}, b.unit()), std::domain_error);
    CHECK_THROWS_AS(d1_action_eval(b, d1, delta_star, unit_open, {}, b.unit()), std::domain_error);
}

TEST_CASE("d1 action agrees with alpha over a one-point X") {
    Rng rng(19);
    int compared = 0;
    while (compared < 200) {
        const auto n = uniform(rng, 1, 3);
        const auto c = random_sc1(rng, n, Colour::Closed);
        Rational top(0);
        for (const auto& iv : c.discs.intervals) top = std::max(top, iv.hi);
        if (top.is_one()) continue;
        auto extended = c;
        extended.colour = Colour::Open;
        extended.discs.intervals.push_back({(top + Rational(1)) / 2, 1});
        std::vector<Closed> fs;
        for (std::size_t j = 0; j < n; ++j) fs.push_back(xi_map(random_loop(rng)));
        const auto f_last = psi_map(Hofiber{0, constant_path(delta_star)}, point);
        const auto y = b.sample(rng, uniform(rng, 1, 5));
        const auto a = alpha_eval(b, d1, delta_star, extended, fs, f_last, y);
        CHECK(a.value == d1_action_eval(b, d1, delta_star, c, fs, y));
        CHECK(a.tags == std::vector<std::size_t>(y.arity(), 0));
        ++compared;
    }
}

TEST_CASE("actions land in bimodule maps") {
    Rng rng(23);
    const FiberBundleBimodule<LittleIntervals, WE> bundle(d1, family);
    const auto based = make_qx_bimodule(d1, family, 0);
    for (int k = 0; k < 6; ++k) {
        const auto n = uniform(rng, 1, 2);
        std::vector<Closed> fs;
        for (std::size_t j = 0; j < n; ++j) fs.push_back(xi_map(random_loop(rng)));
        const auto c = random_sc1(rng, n, Colour::Closed);
        const Closed d{"d1", [=](const BE& y) { return d1_action_eval(b, d1, delta_star, c, fs, y); }};
        auto rep = check_bimodule_map(b, based, d, 30, 800 + k);
        INFO(rep.to_text());
        CHECK(rep.passed());

        const auto o = random_sc1(rng, n - 1, Colour::Open);
        const auto last = psi_map(random_hofiber_point(rng, family));
        const std::vector<Closed> closed_fs(fs.begin(), fs.begin() + static_cast<long>(n - 1));
        const Open a{"alpha", [=](const BE& y) { return alpha_eval(b, d1, delta_star, o, closed_fs, last, y); }};
        rep = check_bimodule_map(b, bundle, a, 30, 900 + k);
        INFO(rep.to_text());
        CHECK(rep.passed());
    }
}

TEST_CASE("composing configurations matches nesting the actions") {
    Rng rng(29);
    for (int k = 0; k < 200; ++k) {
        const auto n = uniform(rng, 0, 2);
        const auto c = random_sc1(rng, n, Colour::Open);
        const auto i = uniform(rng, 1, n + 1);
        std::vector<Closed> fs;
        for (std::size_t j = 0; j < n; ++j) fs.push_back(xi_map(random_loop(rng)));
        const auto last = psi_map(random_hofiber_point(rng, family));
        const auto y = b.sample(rng, uniform(rng, 1, 5));

        std::vector<Closed> combined(fs.begin(), fs.begin() + static_cast<long>(i - 1));
        if (i <= n) {
            const auto inner = random_sc1(rng, uniform(rng, 1, 2), Colour::Closed);
            std::vector<Closed> inner_fs;
            for (std::size_t j = 0; j < inner.arity(); ++j) inner_fs.push_back(xi_map(random_loop(rng)));
            auto nested = fs;
            nested[i - 1] = Closed{"d1", [=](const BE& z) { return d1_action_eval(b, d1, delta_star, inner, inner_fs, z); }};
            combined.insert(combined.end(), inner_fs.begin(), inner_fs.end());
            combined.insert(combined.end(), fs.begin() + static_cast<long>(i), fs.end());
            CHECK(alpha_eval(b, d1, delta_star, sc1_compose(c, i, inner), combined, last, y) ==
                  alpha_eval(b, d1, delta_star, c, nested, last, y));
        } else {
            const auto inner = random_sc1(rng, uniform(rng, 0, 2), Colour::Open);
            std::vector<Closed> inner_fs;
            for (std::size_t j = 0; j < inner.closed_inputs(); ++j) inner_fs.push_back(xi_map(random_loop(rng)));
            const Open nested{"alpha", [=](const BE& z) { return alpha_eval(b, d1, delta_star, inner, inner_fs, last, z); }};
            combined.insert(combined.end(), inner_fs.begin(), inner_fs.end());
            CHECK(alpha_eval(b, d1, delta_star, sc1_compose(c, i, inner), combined, last, y) ==
                  alpha_eval(b, d1, delta_star, c, fs, nested, y));
        }
    }
}

TEST_CASE("xi and psi' intertwine the actions") {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        const auto n = uniform(rng, 0, 2);
        const auto c = random_sc1(rng, n, Colour::Open);
        std::vector<Path> loops;
        std::vector<Closed> fs;
        for (std::size_t j = 0; j < n; ++j) {
            loops.push_back(random_loop(rng));
            fs.push_back(xi_map(loops.back()));
        }
        const auto h = random_hofiber_point(rng, family);
        auto paths = loops;
        paths.push_back(h.g);
        const Hofiber acted{h.x, sc1_act_paths(c, delta_star, paths)};
        const auto y = b.sample(rng, uniform(rng, 1, 5));
        const auto lhs = psi_prime_eval(d1, family, acted, y);
        const auto rhs = alpha_eval(b, d1, delta_star, c, fs, psi_map(h), y);
        CHECK(rhs.value == lhs.second);
        CHECK(rhs.tags == std::vector<std::size_t>(y.arity(), lhs.first));
    }
}
