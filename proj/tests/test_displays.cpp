#include "doctest.h"

#include "opcalc/mapping.hpp"
#include "opcalc/operads/symbolic.hpp"

#include <map>

using namespace opcalc;

namespace {

using BS = BModule<SymbolicOperad>;
using WS = BS::WElement;
using Map = OperadMap<WS, Term>;
using Path = PathOfMaps<WS, Term>;

const SymbolicOperad sym;
const BS b;
const auto& w = b.w();

// x1 binary at t1 = 1/3, a ternary at height 1 on its first input, x2 ternary at t2 = 1/2 on the second
const char* const two_level_text =
    "(v:h=1/3 {(v x1/2 l1 l2)} (v:h=1 {(v a/3 l1 l2 l3)} l1 l2 l3) (v:h=1/2 {(v x2/3 l1 l2 l3)} l4 l5 l6))";

const std::map<Rational, std::string> times{{Rational(1, 3), "t1"}, {Rational(1, 2), "t2"}};

Term g_atom(const WS& y, const std::string& t) {
    const auto p = w.mu(y);
    const auto n = sym.arity(p);
    return sym.generator("g" + std::to_string(n) + "(" + sym.to_string(p) + ";" + t + ")", n);
}

const Map delta_star{"g(-;1)", [](const WS& y) { return g_atom(y, "1"); }};
const Map delta_x{"delta_x", [](const WS& y) {
                      const auto p = w.mu(y);
                      return sym.generator("delta_x(" + sym.to_string(p) + ")", sym.arity(p));
                  }};

const Path loop{"g", {}, [](const WS& y, const Rational& t) {
                    if (t.is_zero() || t.is_one()) return delta_star(y);
                    return g_atom(y, times.at(t));
                }};

const Path towards_x{"g", {}, [](const WS& y, const Rational& t) {
                         if (t.is_zero()) return delta_star(y);
                         if (t.is_one()) return delta_x(y);
                         return g_atom(y, times.at(t));
                     }};

}  // namespace

TEST_CASE("xi on the two-level example, symbolically") {
    const auto y = b.parse(two_level_text);
    CHECK(sym.to_string(xi_eval(sym, delta_star, loop, y)) == "g2(x1;t1)(g3(a;1), g3(x2;t2))");
}

TEST_CASE("psi' on the two-level example, symbolically") {
    const auto y = b.parse(two_level_text);
    const PointedMapFamily<WS, Term> family{PointedSet{{"*", "x"}}, {delta_star, delta_x}};
    const auto out = psi_prime_eval(sym, family, HofiberPoint<WS, Term>{1, towards_x}, y);
    CHECK(out.first == 1);
    CHECK(sym.to_string(out.second) == "g2(x1;t1)(delta_x(a), g3(x2;t2))");
}

TEST_CASE("symbolic evaluation follows the leaf labels") {
    // the same point presented with its top vertices' inputs interleaved
    const auto y = b.parse(
        "(v:h=1/3 {(v x1/2 l1 l2)} (v:h=1 {(v a/3 l1 l2 l3)} l1 l3 l5) (v:h=1/2 {(v x2/3 l1 l2 l3)} l2 l4 l6))");
    CHECK(sym.to_string(xi_eval(sym, delta_star, loop, y)) == "g2(x1;t1)(g3(a;1), g3(x2;t2)) [1 3 5 2 4 6]");
}
