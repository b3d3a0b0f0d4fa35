#include <algorithm>

#include "doctest.h"
#include "starpi/normal_form.hpp"
#include "starpi/parser.hpp"

using namespace starpi;

TEST_CASE("order_commutator on small inputs") {
    std::vector<Variable> already{sym(2), sym(1)};
    auto od = order_commutator(already);
    REQUIRE(od.ordered.size() == 1);
    CHECK(od.ordered[0].first == Rational(1));
    CHECK(od.ordered[0].second == already);
    CHECK(od.two_commutator_part.is_zero());

    std::vector<Variable> swapped{sym(1), sym(2)};
    od = order_commutator(swapped);
    REQUIRE(od.ordered.size() == 1);
    CHECK(od.ordered[0].first == Rational(-1));
    CHECK(od.ordered[0].second == already);

    std::vector<Variable> jac{sym(1), sym(3), sym(2)};
    od = order_commutator(jac);
    CHECK(od.two_commutator_part.is_zero());
    CHECK(od.expand() == commutator(std::span<const Variable>(jac)));

    std::vector<Variable> same{sym(1), sym(1)};
    CHECK(order_commutator(same).expand().is_zero());
    std::vector<Variable> one{sym(1)};
    CHECK_THROWS_AS((void)order_commutator(one), arity_error);
}

TEST_CASE("order_commutator produces a genuine two-commutator remainder") {
    // [y1, y2, y3, y4] needs reordering with a nonzero residue
    std::vector<Variable> letters{sym(1), sym(2), sym(4), sym(3)};
    auto od = order_commutator(letters);
    CHECK(od.expand() == commutator(std::span<const Variable>(letters)));
    for (const auto& [c, seq] : od.ordered) {
        CHECK(seq[1] < seq[0]);
        CHECK(std::is_sorted(seq.begin() + 1, seq.end()));
    }
}

TEST_CASE("proper_decompose examples") {
    auto comps = proper_decompose(parse_poly("y2 y1"));
    CHECK(expand(comps) == parse_poly("y2 y1"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].sym_prefix == Word{});
    CHECK(comps[0].proper == parse_poly("-[y1,y2]"));
    CHECK(comps[1].sym_prefix == Word{sym(1), sym(2)});
    CHECK(comps[1].proper == NCPoly::unit());

    comps = proper_decompose(parse_poly("z1 y1"));
    CHECK(expand(comps) == parse_poly("z1 y1"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].sym_prefix == Word{});
    CHECK(comps[0].proper == parse_poly("[z1,y1]"));
    CHECK(comps[1].sym_prefix == Word{sym(1)});
    CHECK(comps[1].proper == parse_poly("z1"));

    NCPoly prods = parse_poly("[y2,y1][y3,z1] - 2 [z1,y1]");
    comps = proper_decompose(prods);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].sym_prefix == Word{});
    CHECK(comps[0].proper == prods);

    CHECK(proper_decompose(NCPoly()).empty());
}

TEST_CASE("canonical shape recognition") {
    CanonicalTerm good{Rational(1), {}, {sym(4), sym(3)}, {sym(2), sym(1)}};
    CHECK(matches_canonical_shape(good, true));
    CanonicalTerm bad_head{Rational(1), {}, {sym(3), sym(4)}, {sym(2), sym(1)}};
    CHECK(!matches_canonical_shape(bad_head, true));
    CanonicalTerm bad_allsym{Rational(1), {}, {sym(3), sym(2)}, {sym(4), sym(1)}};
    CHECK(!matches_canonical_shape(bad_allsym, true));
    CHECK(matches_canonical_shape(bad_allsym, false));
}

TEST_CASE("two_commutator_canonical fixes the minimal variable") {
    std::vector<Variable> vars{sym(1), sym(2), sym(3), sym(4)};
    const IdealContext& ctx = ideal_context(vars);

    TwoCommInput fixed{{}, {sym(4), sym(3)}, {sym(2), sym(1)}};
    CanonicalResult r = two_commutator_canonical(fixed, ctx);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.poly == fixed.expand());

    TwoCommInput moved{{}, {sym(2), sym(1)}, {sym(4), sym(3)}};
    r = two_commutator_canonical(moved, ctx);
    CHECK(ctx.contains(moved.expand() - r.poly));
    for (const auto& t : r.terms) CHECK(matches_canonical_shape(t, true));

    // shape-matching front end accepts the expansion and scalar multiples
    NCPoly scaled = moved.expand() * Rational(-3, 2);
    r = two_commutator_canonical(scaled, ctx);
    CHECK(ctx.contains(scaled - r.poly));
    CHECK_THROWS_AS((void)two_commutator_canonical(parse_poly("y1 y2 y3 y4"), ctx),
                    std::invalid_argument);
}

TEST_CASE("two_commutator_canonical with a skew prefix") {
    std::vector<Variable> vars{skew(1), sym(1), sym(2), sym(3), sym(4)};
    const IdealContext& ctx = ideal_context(vars);
    TwoCommInput in{{skew(1)}, {sym(2), sym(1)}, {sym(4), sym(3)}};
    CanonicalResult r = two_commutator_canonical(in, ctx);
    CHECK(ctx.contains(in.expand() - r.poly));
    for (const auto& t : r.terms) CHECK(matches_canonical_shape(t, false));
    CHECK_THROWS_AS((void)two_commutator_canonical(
                        TwoCommInput{{sym(1)}, {sym(2), sym(3)}, {sym(4), skew(1)}}, ctx),
                    parity_error);
}

TEST_CASE("omega_y enumeration at n = 4 gives the two expected elements") {
    auto list = enumerate_omega_y({sym(1), sym(2), sym(3), sym(4)});
    REQUIRE(list.size() == 2);
    CHECK(list[0] == parse_poly("[y4,y3][y2,y1]"));
    CHECK(list[1] == parse_poly("[y4,y2][y3,y1]"));
    CHECK_THROWS_AS((void)enumerate_omega_y({sym(1), sym(2), sym(3)}), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_omega_y({skew(1), sym(1), sym(2), sym(3)}), parity_error);
}

TEST_CASE("omega_z enumeration") {
    auto list = enumerate_omega_z({skew(1), sym(1), sym(2)});
    REQUIRE(list.size() == 2);
    CHECK(list[0] == parse_poly("y2 [y1,z1]"));
    CHECK(list[1] == parse_poly("y1 [y2,z1]"));
    auto degenerate = enumerate_omega_z({skew(1), skew(2)});
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate[0] == parse_poly("[z2,z1]"));
    for (const auto& e : enumerate_omega_z({skew(1), sym(1), sym(2), sym(3)}))
        CHECK(is_multilinear(e, {skew(1), sym(1), sym(2), sym(3)}));
    CHECK_THROWS_AS((void)enumerate_omega_z({sym(1), sym(2)}), parity_error);
}

TEST_CASE("B-basis enumeration") {
    auto two_sym = enumerate_B_basis(MultilinearSpace({sym(1), sym(2)}));
    REQUIRE(two_sym.size() == 2);
    CHECK(two_sym[0] == parse_poly("y1 y2"));
    CHECK(two_sym[1] == parse_poly("[y2,y1]"));
    auto mixed = enumerate_B_basis(MultilinearSpace({skew(1), sym(1)}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == parse_poly("y1 z1"));
    CHECK(mixed[1] == parse_poly("[y1,z1]"));
    for (const auto& e : enumerate_B_basis(MultilinearSpace::signature(2, 1)))
        CHECK(is_multilinear(e, {skew(1), sym(1), sym(2)}));
}
