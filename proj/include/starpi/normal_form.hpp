#pragma once

#include "starpi/tideal.hpp"

namespace starpi {

// Exact free-algebra decomposition of a left-normed commutator:
//   [letters] = sum of ordered commutators + two_commutator_part
// where each ordered sequence satisfies w1 > w2 <= w3 <= ... <= wn and the
// remainder is a combination of products of two commutators.
struct OrderedDecomposition {
    std::vector<std::pair<Rational, std::vector<Variable>>> ordered;
    NCPoly two_commutator_part;

    NCPoly expand_ordered() const;
    NCPoly expand() const;  // ordered part + remainder
};

OrderedDecomposition order_commutator(std::span<const Variable> letters);

// One component of the decomposition p = sum prefix * proper, the prefix an
// increasing word of symmetric variables and the proper part a combination of
// z-prefixed products of commutators.
struct ProperComponent {
    Word sym_prefix;
    NCPoly proper;
};

std::vector<ProperComponent> proper_decompose(const NCPoly& p);

NCPoly expand(const std::vector<ProperComponent>& components);

// Multilinear input z_{r1}...z_{rd} [first][second]; prefix letters must be
// skew and all letters pairwise distinct.
struct TwoCommInput {
    Word z_prefix;
    std::vector<Variable> first;
    std::vector<Variable> second;

    NCPoly expand() const;
    std::vector<Variable> variables() const;
};

// Canonical two-commutator element u_{i1}...u_{im} [u_{j1},...,u_{jn}][k1,k2].
struct CanonicalTerm {
    Rational coeff;
    Word prefix;                    // ascending
    std::vector<Variable> middle;   // j1 > j2 <= ... <= jn
    std::array<Variable, 2> last;   // k2 < k1, k2 <= i1, k2 <= j2

    NCPoly expand() const;
};

struct CanonicalResult {
    std::vector<CanonicalTerm> terms;
    NCPoly poly;
};

// Rewrites the input modulo I into canonical two-commutator form, following
// the minimal-variable relocation / ordering / head-reduction case split.
// Every rewriting step is certified against the consequence span of the
// context; a failed certificate throws.
CanonicalResult two_commutator_canonical(const TwoCommInput& input, const IdealContext& ctx);

// Shape-matching front end: accepts any scalar multiple of an expanded
// z-prefix times two commutators; throws on shape mismatch.
CanonicalResult two_commutator_canonical(const NCPoly& p, const IdealContext& ctx);

// In the all-symmetric case the extra head constraint k1 <= j1 applies.
bool matches_canonical_shape(const CanonicalTerm& t, bool all_symmetric);

// Independence set with a distinguished minimal skew variable z1:
// u_{i1}...u_{ir} [u_{j1},...,u_{js}] [u_k, z1]. The degenerate empty middle
// (s = 0) is included.
std::vector<NCPoly> enumerate_omega_z(const std::vector<Variable>& vars);

// Independence set over symmetric variables: [y_{j1},...,y_{js}][y_k,y1]
// with j1 > j2 < ... < js and j1 > k.
std::vector<NCPoly> enumerate_omega_y(const std::vector<Variable>& vars);

// Multilinear basis shadow for the block-diagonal algebra: increasing
// y-prefix times increasing z-prefix times an optional ordered commutator
// over the remaining variables.
std::vector<NCPoly> enumerate_B_basis(const MultilinearSpace& space);

}  // namespace starpi
