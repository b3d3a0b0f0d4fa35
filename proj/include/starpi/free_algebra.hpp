#pragma once

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "starpi/rational.hpp"

namespace starpi {

// Free-algebra variable. Skew (z) variables sort below symmetric (y) ones:
// z1 < z2 < ... < y1 < y2 < ...
struct Variable {
    enum Kind { Skew = 0, Sym = 1 };
    Kind kind = Sym;
    int index = 1;

    auto operator<=>(const Variable&) const = default;
};

inline Variable sym(int i) { return {Variable::Sym, i}; }
inline Variable skew(int i) { return {Variable::Skew, i}; }

std::string to_string(const Variable& v);

// Monomial of the free algebra; the empty word is the unit.
using Word = std::vector<Variable>;

std::string to_string(const Word& w);

struct arity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct homogeneity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of F<Y u Z>: finite Word -> coefficient association, canonical
// (no zero coefficients stored).
class NCPoly {
  public:
    using TermMap = std::map<Word, Rational>;

    NCPoly() = default;
    explicit NCPoly(const Rational& c);
    explicit NCPoly(const Variable& v);
    explicit NCPoly(const Word& w, const Rational& c = Rational(1));

    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return NCPoly(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const Rational& c) const;

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    void add_term(const Word& w, const Rational& c);

    std::vector<Variable> variables() const;

  private:
    TermMap terms_;
};

NCPoly operator*(const Rational& c, const NCPoly& p);

// Word reversal with sign (-1)^(number of skew letters), extended linearly.
NCPoly involute(const NCPoly& p);

// Left-normed iterated commutator [a1,...,an] = [[a1,...,a_{n-1}],an].
NCPoly commutator(std::span<const NCPoly> args);
NCPoly commutator(std::span<const Variable> letters);
NCPoly commutator(std::initializer_list<NCPoly> args);

// Sign eps with involute([w1,...,wn]) = eps * [w1,...,wn]:
// (-1)^(n-1) * (-1)^(#skew letters).
int commutator_symmetry_sign(std::span<const Variable> letters);

// Multidegree of a nonzero homogeneous polynomial; throws otherwise.
std::map<Variable, int> multidegree(const NCPoly& p);

// True iff every word of p is a permutation of vars.
bool is_multilinear(const NCPoly& p, const std::vector<Variable>& vars);

// Involution-preserving endomorphism: Sym variables must map to *-symmetric
// images, Skew to *-skew. Unassigned variables map to themselves.
using VarAssignment = std::map<Variable, NCPoly>;
NCPoly substitute(const NCPoly& p, const VarAssignment& assignment);

std::string to_string(const NCPoly& p);

}  // namespace starpi
