#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "starpi/rational.hpp"

namespace starpi {

// Commutative indeterminate, identified by a tag and an index. Matrix entry
// indeterminates use index = 10*row + col under the owning tag.
struct Indeterminate {
    std::string name;
    int index = 0;

    auto operator<=>(const Indeterminate&) const = default;
};

std::string to_string(const Indeterminate& x);

// Exponent multiset, sorted by indeterminate.
using Monomial = std::map<Indeterminate, int>;

int total_degree(const Monomial& m);

// Graded lexicographic: total degree first, then the sorted exponent keys.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate commutative polynomial over Q in canonical form: no zero
// coefficients stored, terms keyed by sorted monomials.
class ScalarPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    ScalarPoly() = default;
    explicit ScalarPoly(const Rational& c);
    explicit ScalarPoly(const Indeterminate& x);

    static ScalarPoly zero() { return ScalarPoly(); }
    static ScalarPoly one() { return ScalarPoly(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }

    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator-() const;
    ScalarPoly operator*(const Rational& c) const;

    bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }

    // Replaces one indeterminate by a constant.
    ScalarPoly substitute(const Indeterminate& x, const Rational& value) const;

    // Constant term of a constant polynomial; zero polynomial gives 0.
    Rational constant_value() const;

    std::vector<Indeterminate> indeterminates() const;

    void add_term(const Monomial& m, const Rational& c);

    std::string str() const;

  private:
    TermMap terms_;
};

}  // namespace starpi
