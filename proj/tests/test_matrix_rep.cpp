#include "doctest.h"
#include "starpi/matrix_rep.hpp"

using namespace starpi;

namespace {

UTMat mat_comm(const UTMat& a, const UTMat& b) { return a * b - b * a; }

UTMat scale_poly(const UTMat& m, const ScalarPoly& s) {
    UTMat r(m.algebra());
    for (const auto& [ij, p] : m.entries()) r.set_entry(ij.first, ij.second, p * s);
    return r;
}

// 2x2 block of a size-4 matrix as a UT2 matrix, at row/col offsets.
UTMat block_of(const UTMat& m, int row0, int col0) {
    UTMat b(spec(AlgebraName::UT2));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const ScalarPoly& p = m.entry(row0 + i, col0 + j);
            if (!p.is_zero()) b.set_entry(i, j, p);
        }
    return b;
}

}  // namespace

TEST_CASE("algebra supports") {
    const auto& a = spec(AlgebraName::A);
    CHECK(a.size == 4);
    CHECK(!a.support.count({2, 3}));
    CHECK(a.support.size() == 9);
    const auto& b = spec(AlgebraName::B);
    CHECK(b.support.size() == 6);
    CHECK(!b.support.count({1, 3}));
    // support closed under matrix-unit products, stable under reflection
    for (AlgebraName name : {AlgebraName::UT2, AlgebraName::UT4, AlgebraName::B, AlgebraName::A}) {
        const auto& s = spec(name);
        for (const auto& [i, j] : s.support) {
            CHECK(s.support.count({s.size + 1 - j, s.size + 1 - i}));
            for (const auto& [k, l] : s.support)
                if (j == k) CHECK(s.support.count({i, l}));
        }
    }
    // in particular no product of basis units of A produces e23
    for (const auto& [i, j] : a.support)
        for (const auto& [k, l] : a.support)
            if (j == k) CHECK(!(i == 2 && l == 3));
}

TEST_CASE("reflection is an anti-automorphism of order two") {
    for (AlgebraName name : {AlgebraName::UT4, AlgebraName::B, AlgebraName::A}) {
        UTMat m = generic_element(name, Parity::Any, "m");
        UTMat n = generic_element(name, Parity::Any, "n");
        CHECK(mat_star(mat_star(m)) == m);
        CHECK(mat_star(m * n) == mat_star(n) * mat_star(m));
        CHECK(mat_star(m + n) == mat_star(m) + mat_star(n));
    }
}

TEST_CASE("generic elements have the requested parity and block shape") {
    UTMat s = generic_element(AlgebraName::A, Parity::Sym, "s");
    CHECK(mat_star(s) == s);
    // symmetric corner block C satisfies C* = C: equal corner diagonal
    CHECK(s.entry(1, 3) == s.entry(2, 4));
    UTMat k = generic_element(AlgebraName::A, Parity::Skew, "k");
    CHECK(mat_star(k) == k * Rational(-1));
    // skew corner is d (e11 - e22): the e12 coefficient is forced to zero
    CHECK(k.entry(1, 4).is_zero());
    CHECK(k.entry(1, 3) == -k.entry(2, 4));
}

TEST_CASE("special elements") {
    UTMat y = special_element(SpecialElement::Ycorner, AlgebraName::A);
    CHECK(mat_star(y) == y);
    UTMat z1 = special_element(SpecialElement::Zdiag, AlgebraName::A);
    CHECK(mat_star(z1) == z1 * Rational(-1));
    UTMat zk = special_element(SpecialElement::ZcornerD, AlgebraName::A);
    CHECK(mat_star(zk) == zk * Rational(-1));
    // [Z_k, Z_1] = [[0, -2D],[0,0]]
    UTMat c = mat_comm(zk, z1);
    UTMat expect(spec(AlgebraName::A));
    expect.set_entry(1, 3, ScalarPoly(Rational(-2)));
    expect.set_entry(2, 4, ScalarPoly(Rational(2)));
    CHECK(c == expect);
    UTMat w = special_element(SpecialElement::Wdiag, AlgebraName::A);
    CHECK(mat_star(w) == w);
    CHECK(special_element(SpecialElement::Identity, AlgebraName::A) ==
          ut_identity(AlgebraName::A));
}

TEST_CASE("corner block of a commutator of symmetric generics") {
    // corner([Y2,Y1]) = lambda1 (A2 - A2*) - lambda2 (A1 - A1*), lambda_i = tr(C_i)/2
    UTMat y1 = generic_element(AlgebraName::A, Parity::Sym, "u");
    UTMat y2 = generic_element(AlgebraName::A, Parity::Sym, "v");
    UTMat corner = block_of(mat_comm(y2, y1), 0, 2);
    UTMat a1 = block_of(y1, 0, 0), a2 = block_of(y2, 0, 0);
    UTMat c1 = block_of(y1, 0, 2), c2 = block_of(y2, 0, 2);
    UTMat rhs = scale_poly(a2 - mat_star(a2), half_trace(c1)) -
                scale_poly(a1 - mat_star(a1), half_trace(c2));
    CHECK(corner == rhs);
}

TEST_CASE("commutator skeleton on A") {
    for (Parity p1 : {Parity::Sym, Parity::Skew})
        for (Parity p2 : {Parity::Sym, Parity::Skew}) {
            UTMat c = mat_comm(generic_element(AlgebraName::A, p1, "p"),
                               generic_element(AlgebraName::A, p2, "q"));
            // leading and trailing diagonal blocks are multiples of e12
            for (int i : {1, 2, 3, 4}) CHECK(c.entry(i, i).is_zero());
        }
}

TEST_CASE("half trace and block embedding") {
    UTMat c(spec(AlgebraName::UT2));
    c.set_entry(1, 1, ScalarPoly(Rational(3)));
    c.set_entry(2, 2, ScalarPoly(Rational(5)));
    CHECK(half_trace(c) == ScalarPoly(Rational(4)));
    UTMat a = generic_element(AlgebraName::UT2, Parity::Any, "a");
    UTMat plus = embed_block_diag(a, AlgebraName::A, true);
    CHECK(mat_star(plus) == plus);
    UTMat minus = embed_block_diag(a, AlgebraName::A, false);
    CHECK(mat_star(minus) == minus * Rational(-1));
}

TEST_CASE("evaluation respects parity and support") {
    NCPoly p = NCPoly(Word{sym(1), skew(1)});
    Assignment a = generic_assignment(p, AlgebraName::A);
    a.validate();
    UTMat value = evaluate(p, a);
    for (const auto& [ij, q] : value.entries()) CHECK(spec(AlgebraName::A).support.count(ij));
    Assignment bad = a;
    bad.images.at(sym(1)) = generic_element(AlgebraName::A, Parity::Skew, "x");
    CHECK_THROWS_AS((void)evaluate(p, bad), parity_error);
}

TEST_CASE("generator families vanish pointwise on A") {
    // product of three commutators in generic elements of A
    UTMat p1 = generic_element(AlgebraName::A, Parity::Sym, "p1");
    UTMat p2 = generic_element(AlgebraName::A, Parity::Skew, "p2");
    UTMat p3 = generic_element(AlgebraName::A, Parity::Sym, "p3");
    UTMat p4 = generic_element(AlgebraName::A, Parity::Skew, "p4");
    UTMat p5 = generic_element(AlgebraName::A, Parity::Sym, "p5");
    UTMat p6 = generic_element(AlgebraName::A, Parity::Sym, "p6");
    CHECK((mat_comm(p1, p2) * mat_comm(p3, p4) * mat_comm(p5, p6)).is_zero());
    // [P1,P2] P3 [P4,P5] is *-symmetric
    UTMat m = mat_comm(p1, p2) * p3 * mat_comm(p4, p5);
    CHECK(mat_star(m) == m);
}
