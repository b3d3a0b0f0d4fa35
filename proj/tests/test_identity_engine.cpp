#include "doctest.h"
#include "starpi/identity_engine.hpp"
#include "starpi/parallel.hpp"
#include "starpi/parser.hpp"

using namespace starpi;

TEST_CASE("multilinear space basis and coordinates") {
    MultilinearSpace space = MultilinearSpace::signature(2, 1);  // z1, y1, y2
    CHECK(space.dimension() == 6);
    CHECK(space.variables() == std::vector<Variable>{skew(1), sym(1), sym(2)});
    NCPoly p = parse_poly("2 z1 y1 y2 - [y1,y2] z1");
    QVector v = space.coordinates(p);
    CHECK(space.from_coordinates(v) == p);
    CHECK_THROWS_AS((void)space.coordinates(parse_poly("y1 y2")), std::invalid_argument);
    CHECK_THROWS_AS(MultilinearSpace({sym(1), sym(1)}), std::invalid_argument);
}

TEST_CASE("symmetric commutators vanish on UT2 but mixed ones do not") {
    // symmetric elements of UT2 span {1, e12}, a commutative algebra
    CHECK(is_star_identity(parse_poly("[y1,y2]"), AlgebraName::UT2).is_identity);
    Verdict v = is_star_identity(parse_poly("[z1,y1]"), AlgebraName::UT2);
    CHECK(!v.is_identity);
    REQUIRE(v.witness.has_value());
    // the witness re-evaluates to the claimed nonzero value
    UTMat value = evaluate(parse_poly("[z1,y1]"), v.witness->assignment);
    CHECK(value.entry(v.witness->position.first, v.witness->position.second).constant_value() ==
          v.witness->value);
    CHECK(!is_zero(v.witness->value));
}

TEST_CASE("the UT4 separating polynomial is an identity of A") {
    NCPoly p = parse_poly("[y1,z1][y2,z2][y3,z3]");
    CHECK(is_star_identity(p, AlgebraName::A).is_identity);
    CHECK(!is_star_identity(p, AlgebraName::UT4).is_identity);
}

TEST_CASE("zero polynomial is an identity everywhere") {
    Verdict v = is_star_identity(NCPoly(), AlgebraName::UT4);
    CHECK(v.is_identity);
    CHECK(!v.witness);
}

TEST_CASE("kernel dimension is permutation-count minus rank") {
    MultilinearSpace space = MultilinearSpace::signature(2, 0);
    SparseMatrixQ m = evaluation_matrix(AlgebraName::A, space);
    CHECK(m.col_count() == 2);
    auto kernel = identity_kernel(AlgebraName::A, space);
    CHECK(static_cast<int>(kernel.size()) == space.dimension() - m.rank());
    // each kernel vector is a *-identity of A
    for (const auto& v : kernel)
        CHECK(is_star_identity(space.from_coordinates(v), AlgebraName::A).is_identity);
}

TEST_CASE("degree bound errors name the flag") {
    MultilinearSpace space = MultilinearSpace::signature(7, 0);
    CHECK_THROWS_WITH_AS((void)identity_kernel(AlgebraName::A, space, 6),
                         doctest::Contains("--max-degree"), std::invalid_argument);
}

TEST_CASE("independence rank") {
    NCPoly a = parse_poly("[y1,y2]");
    NCPoly b = parse_poly("[y2,y1]");
    NCPoly c = parse_poly("y1 y2");
    CHECK(independence_rank({a, b}, AlgebraName::A) == 1);
    CHECK(independence_rank({a, c}, AlgebraName::A) == 2);
    CHECK(independence_rank(std::vector<NCPoly>{}, AlgebraName::A) == 0);
    CHECK_THROWS_AS((void)independence_rank({a, parse_poly("y1 y3")}, AlgebraName::A),
                    std::invalid_argument);
    // [y1,y2][y3,y4] is an identity of UT2, so it contributes no rank
    CHECK(independence_rank({parse_poly("[y1,y2][y3,y4]")}, AlgebraName::UT2) == 0);
}

TEST_CASE("parallel evaluation is deterministic") {
    MultilinearSpace space = MultilinearSpace::signature(2, 1);
    set_jobs(1);
    auto k1 = identity_kernel(AlgebraName::B, space);
    set_jobs(4);
    auto k4 = identity_kernel(AlgebraName::B, space);
    set_jobs(1);
    CHECK(k1 == k4);
}
