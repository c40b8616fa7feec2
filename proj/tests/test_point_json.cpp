#include "doctest.h"

#include "point_json.hpp"

#include "opcalc/b_construction.hpp"
#include "opcalc/operads/little_discs.hpp"
#include "opcalc/operads/little_intervals.hpp"

using namespace opcalc;

TEST_CASE("JSON round trip of W and B points") {
    const BModule<LittleIntervals> b;
    const auto& w = b.w();
    Rng rng(3);
    for (int k = 0; k < 300; ++k) {
        const auto x = w.sample(rng, uniform(rng, 1, 5));
        const auto j = cli::point_text_to_json(w.to_string(x), false);
        CHECK(w.parse(cli::point_json_to_text(j, false)) == x);
        CHECK(cli::point_text_to_json(cli::point_json_to_text(j, false), false) == j);

        const auto y = b.sample(rng, uniform(rng, 1, 5));
        const auto jb = cli::point_text_to_json(b.to_string(y), true);
        CHECK(b.parse(cli::point_json_to_text(jb, true)) == y);
    }
    const BModule<LittleDiscs> b2;
    for (int k = 0; k < 100; ++k) {
        const auto y = b2.sample(rng, uniform(rng, 1, 4));
        CHECK(b2.parse(cli::point_json_to_text(cli::point_text_to_json(b2.to_string(y), true), true)) == y);
    }
}

TEST_CASE("heights and lengths stay exact strings") {
    const auto j = cli::point_text_to_json("(v:h=1/3 {(v [0,1/3;2/3,1] l1 l2)} l1 l2)", true);
    CHECK(j["h"] == "1/3");
    CHECK(j["label"]["label"] == "[0,1/3;2/3,1]");
    CHECK(cli::looks_like_json(" {\"leaf\": 1}"));
    CHECK_FALSE(cli::looks_like_json("(v [0,1] l1)"));
    CHECK_THROWS_AS(cli::point_json_to_text(cli::Json{{"label", 3}}, false), std::invalid_argument);
}
