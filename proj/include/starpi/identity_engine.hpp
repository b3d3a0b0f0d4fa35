#pragma once

#include <optional>

#include "starpi/matrix_rep.hpp"
#include "starpi/sparse_matrix.hpp"

namespace starpi {

// Concrete counterexample: a rational matrix per variable plus the position
// and value of one nonzero entry of the evaluated polynomial.
struct Witness {
    Assignment assignment;
    std::pair<int, int> position;
    Rational value;
};

struct Verdict {
    bool is_identity;
    std::optional<Witness> witness;  // present iff not an identity
};

// Span of the n! words that are permutations of a fixed variable set, in
// lexicographic order of permutations.
class MultilinearSpace {
  public:
    explicit MultilinearSpace(std::vector<Variable> vars);

    // Convenience: variables y1..yp, z1..zq.
    static MultilinearSpace signature(int sym_count, int skew_count);

    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Word>& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.size()); }

    // Coordinates of a multilinear polynomial over this variable set.
    QVector coordinates(const NCPoly& p) const;
    NCPoly from_coordinates(const QVector& v) const;

  private:
    std::vector<Variable> vars_;  // sorted ascending
    std::vector<Word> basis_;
    std::map<Word, int> index_;
};

// Degree cap for kernel / consequence computations (n! growth).
inline constexpr int kDefaultDegreeBound = 6;

// Decides whether p vanishes under all parity-respecting substitutions from
// the algebra, by a single evaluation on fresh generic elements. When not an
// identity, extracts a deterministic integer witness.
Verdict is_star_identity(const NCPoly& p, AlgebraName algebra);

// Rows of the evaluation matrix are the linear functionals "coefficient of
// monomial mu in entry (i,j)" applied to the n! basis words; columns are the
// basis words. Its kernel is P_V intersected with Id(algebra,*).
SparseMatrixQ evaluation_matrix(AlgebraName algebra, const MultilinearSpace& space);

std::vector<QVector> identity_kernel(AlgebraName algebra, const MultilinearSpace& space,
                                     int degree_bound = kDefaultDegreeBound);

// Rank of the images of the polynomials in P_V / (P_V cap Id(algebra,*)).
int independence_rank(const std::vector<NCPoly>& polys, AlgebraName algebra);

}  // namespace starpi
