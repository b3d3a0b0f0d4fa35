#include <algorithm>

#include "doctest.h"
#include "starpi/parser.hpp"
#include "starpi/tideal.hpp"

using namespace starpi;

TEST_CASE("jacobi sum symmetrizes over a 3-cycle") {
    NCPoly f = parse_poly("[y1,y2][y3,y4]");
    NCPoly ja = jacobi_sum(f, {sym(1), sym(2), sym(3)});
    CHECK(ja == parse_poly("[y1,y2][y3,y4] + [y2,y3][y1,y4] + [y3,y1][y2,y4]"));
    CHECK_THROWS_AS((void)jacobi_sum(f, {sym(1), sym(2), skew(1)}), parity_error);
    CHECK_THROWS_AS((void)jacobi_sum(f, {sym(1), sym(2), sym(9)}), std::invalid_argument);
}

TEST_CASE("generator instantiation") {
    auto gens = instantiate_generators();
    // 64 + up to 32 + 32 + 2 parity instances, deduplicated up to sign
    CHECK(gens.size() >= 100);
    CHECK(gens.size() <= 130);
    for (const auto& g : gens) {
        CHECK(!g.poly.is_zero());
        // leading coefficient normalized positive for dedup
        CHECK(sgn(g.poly.terms().begin()->second) > 0);
    }
    int f1 = 0, f2a = 0, f2b = 0, f3 = 0;
    for (const auto& g : gens) {
        if (g.family.rfind("F1", 0) == 0) ++f1;
        if (g.family.rfind("F2a", 0) == 0) ++f2a;
        if (g.family.rfind("F2b", 0) == 0) ++f2b;
        if (g.family.rfind("F3", 0) == 0) ++f3;
    }
    CHECK(f1 == 64);
    CHECK(f3 == 2);
    CHECK(f2a > 0);
    CHECK(f2b > 0);
}

TEST_CASE("consequences live in the multilinear space and are normalized") {
    MultilinearSpace space = MultilinearSpace::signature(4, 0);
    auto set = multilinear_consequences(space);
    CHECK(!set.vectors.empty());
    for (const auto& v : set.vectors) {
        CHECK(static_cast<int>(v.coords.size()) == space.dimension());
        auto lead = std::find_if(v.coords.begin(), v.coords.end(),
                                 [](const Rational& c) { return !is_zero(c); });
        REQUIRE(lead != v.coords.end());
        CHECK(*lead == Rational(1));
    }
}

TEST_CASE("boundary restriction does not change the span at n = 4") {
    MultilinearSpace space = MultilinearSpace::signature(3, 1);
    IdealContext full(space, ConsequenceOptions{.increasing_boundary = false});
    IdealContext restricted(space, ConsequenceOptions{.increasing_boundary = true});
    CHECK(full.dim() == restricted.dim());
}

TEST_CASE("ideal span is stable under parity-preserving transpositions") {
    MultilinearSpace space = MultilinearSpace::signature(4, 0);
    const IdealContext& ctx = ideal_context(space.variables());
    VarAssignment swap12{{sym(1), NCPoly(sym(2))}, {sym(2), NCPoly(sym(1))}};
    int checked = 0;
    for (const auto& v : ctx.consequences().vectors) {
        if (++checked > 25) break;
        NCPoly moved = substitute(space.from_coordinates(v.coords), swap12);
        CHECK(ctx.contains(moved));
    }
}

TEST_CASE("redundant generators do not shrink the span") {
    // deduplication sanity: the span contains every raw, unscaled consequence
    MultilinearSpace space = MultilinearSpace::signature(2, 2);
    const IdealContext& ctx = ideal_context(space.variables());
    for (const auto& v : ctx.consequences().vectors) {
        QVector scaled = v.coords;
        for (auto& c : scaled) c *= Rational(-7, 3);
        CHECK(ctx.contains(scaled));
    }
}

TEST_CASE("membership testing") {
    MultilinearSpace space = MultilinearSpace::signature(4, 0);
    CHECK(ideal_contains(space, NCPoly()));
    NCPoly gen = parse_poly("[y1,y2][y3,y4] + [y2,y3][y1,y4] + [y3,y1][y2,y4]");
    CHECK(ideal_contains(space, gen));
    CHECK(!ideal_contains(space, parse_poly("y1 y2 y3 y4")));
}

TEST_CASE("containment direction: ideal span inside the kernel") {
    for (auto [p, q] : {std::pair{4, 0}, std::pair{2, 2}, std::pair{1, 3}}) {
        MultilinearSpace space = MultilinearSpace::signature(p, q);
        TheoremReport r = verify_main_theorem(space);
        CHECK(r.contained);
        CHECK(r.dim_ideal <= r.dim_kernel);
    }
}
