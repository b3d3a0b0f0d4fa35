#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "starpi/free_algebra.hpp"
#include "starpi/scalar_poly.hpp"

namespace starpi {

enum class AlgebraName { UT2, UT4, B, A };

AlgebraName algebra_from_string(const std::string& s);
std::string to_string(AlgebraName n);

// Upper triangular matrix algebra restricted to a support mask. The support
// is closed under products of matrix units and stable under the reflection
// (i,j) -> (size+1-j, size+1-i).
struct AlgebraSpec {
    AlgebraName name;
    int size;
    std::set<std::pair<int, int>> support;  // 1-based (row, col), row <= col
};

// Shared immutable spec instances.
const AlgebraSpec& spec(AlgebraName name);

// Matrix over the commutative polynomial ring, entries confined to the
// algebra's support mask. Absent entries are zero.
class UTMat {
  public:
    explicit UTMat(const AlgebraSpec& s) : spec_(&s) {}

    const AlgebraSpec& algebra() const { return *spec_; }
    int size() const { return spec_->size; }

    const ScalarPoly& entry(int i, int j) const;
    void set_entry(int i, int j, ScalarPoly p);

    bool is_zero() const { return entries_.empty(); }
    const std::map<std::pair<int, int>, ScalarPoly>& entries() const { return entries_; }

    UTMat operator+(const UTMat& o) const;
    UTMat operator-(const UTMat& o) const;
    UTMat operator*(const UTMat& o) const;
    UTMat operator*(const Rational& c) const;
    bool operator==(const UTMat& o) const;

    std::string str() const;

  private:
    const AlgebraSpec* spec_;
    std::map<std::pair<int, int>, ScalarPoly> entries_;
};

UTMat ut_zero(AlgebraName name);
UTMat ut_identity(AlgebraName name);
UTMat matrix_unit(AlgebraName name, int i, int j);

// Reflection involution: entry (i,j) moves to (k+1-j, k+1-i).
UTMat mat_star(const UTMat& m);

enum class Parity { Sym, Skew, Any };

// Matrix with fresh indeterminate entries on the support, symmetrized to the
// requested parity as (M + M*)/2 or (M - M*)/2. Indeterminates are named
// (tag, 10*i + j).
UTMat generic_element(AlgebraName name, Parity parity, const std::string& tag);

enum class SpecialElement { Ycorner, Zdiag, ZcornerD, Wdiag, Identity };

// Constant fixture matrices in UT4-shaped algebras:
//   Ycorner  = [[0, I2], [0, 0]]        (symmetric)
//   Zdiag    = [[I2, 0], [0, -I2]]      (skew)
//   ZcornerD = [[0, e11-e22], [0, 0]]   (skew)
//   Wdiag    = [[e22, 0], [0, e11]]     (symmetric)
UTMat special_element(SpecialElement which, AlgebraName name);

// (c11 + c22)/2 for a UT2 matrix.
ScalarPoly half_trace(const UTMat& c);

// Embeds a UT2 matrix M as diag(M, M*) (plus = true) or diag(M, -M*) into a
// size-4 algebra; the result is symmetric resp. skew.
UTMat embed_block_diag(const UTMat& block, AlgebraName target, bool plus);

// Variable -> matrix, all sharing one algebra; symmetric variables must map
// to *-fixed matrices and skew variables to *-negated ones.
struct Assignment {
    AlgebraName algebra;
    std::map<Variable, UTMat> images;

    void validate() const;
};

// Unique algebra-homomorphism extension of the assignment.
UTMat evaluate(const NCPoly& p, const Assignment& a);

// Fresh generic assignment for every variable of p (tag = variable name).
Assignment generic_assignment(const NCPoly& p, AlgebraName name);
Assignment generic_assignment(const std::vector<Variable>& vars, AlgebraName name);

}  // namespace starpi
