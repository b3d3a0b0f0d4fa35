#include <random>

#include "doctest.h"
#include "starpi/parser.hpp"

using namespace starpi;

TEST_CASE("grammar basics") {
    CHECK(parse_poly("y1") == NCPoly(sym(1)));
    CHECK(parse_poly("z2") == NCPoly(skew(2)));
    CHECK(parse_poly("y1 y2") == NCPoly(Word{sym(1), sym(2)}));
    CHECK(parse_poly("3/2 y1") == NCPoly(sym(1)) * Rational(3, 2));
    CHECK(parse_poly("y1 - y1").is_zero());
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("2") == NCPoly(Rational(2)));
    CHECK(parse_poly("-y1") == -NCPoly(sym(1)));
    CHECK(parse_poly("y1^3") == NCPoly(Word{sym(1), sym(1), sym(1)}));
    CHECK(parse_poly("y1^0") == NCPoly::unit());
    CHECK(parse_poly("(y1 + y2)^2") ==
          (NCPoly(sym(1)) + NCPoly(sym(2))) * (NCPoly(sym(1)) + NCPoly(sym(2))));
}

TEST_CASE("commutator brackets are left-normed") {
    CHECK(parse_poly("[y1,y2]") == commutator({NCPoly(sym(1)), NCPoly(sym(2))}));
    CHECK(parse_poly("[y1,y2,y3]") ==
          commutator({NCPoly(sym(1)), NCPoly(sym(2)), NCPoly(sym(3))}));
    CHECK(parse_poly("[y1,y2][y3,y4][y5,y6]") ==
          parse_poly("[y1,y2]") * parse_poly("[y3,y4]") * parse_poly("[y5,y6]"));
    CHECK(parse_poly("[y1 + z1, y2]") ==
          commutator({NCPoly(sym(1)) + NCPoly(skew(1)), NCPoly(sym(2))}));
}

TEST_CASE("involution postfix") {
    CHECK(parse_poly("(z1 y1)~") == involute(parse_poly("z1 y1")));
    CHECK(parse_poly("2 z1 [y1,y2] - (z1 y1)~") ==
          parse_poly("2 z1 y1 y2 - 2 z1 y2 y1 + y1 z1"));
    CHECK(parse_poly("y1~") == NCPoly(sym(1)));
    CHECK(parse_poly("z1~") == -NCPoly(skew(1)));
    CHECK(parse_poly("[y1,y2]~") == parse_poly("[y2,y1]"));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS((void)parse_poly("[y1]"), parse_error);
    CHECK_THROWS_AS((void)parse_poly(""), parse_error);
    CHECK_THROWS_AS((void)parse_poly("y"), parse_error);
    CHECK_THROWS_AS((void)parse_poly("y1 +"), parse_error);
    CHECK_THROWS_AS((void)parse_poly("(y1"), parse_error);
    CHECK_THROWS_AS((void)parse_poly("y1 y2)"), parse_error);
    CHECK_THROWS_AS((void)parse_poly("1/0"), parse_error);
    CHECK_THROWS_AS((void)parse_poly("x1"), parse_error);
    try {
        parse_poly("y1 + @");
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_poly("  [ y1 , y2 ]  ") == parse_poly("[y1,y2]"));
    CHECK(parse_poly("2y1y2") == parse_poly("2 y1 y2"));
}

TEST_CASE("parse-print-parse is idempotent") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> words(1, 5), len(0, 5), coeff(-4, 4), kind(0, 1), idx(1, 3);
    for (int i = 0; i < 200; ++i) {
        NCPoly p;
        int w = words(rng);
        for (int j = 0; j < w; ++j) {
            Word word;
            int l = len(rng);
            for (int k = 0; k < l; ++k)
                word.push_back(kind(rng) ? sym(idx(rng)) : skew(idx(rng)));
            p.add_term(word, Rational(coeff(rng), 2));
        }
        std::string printed = to_string(p);
        NCPoly q = parse_poly(printed);
        CHECK(q == p);
        CHECK(to_string(q) == printed);
    }
}
