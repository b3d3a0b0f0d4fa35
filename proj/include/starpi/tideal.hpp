#pragma once

#include <array>
#include <memory>
#include <string>

#include "starpi/identity_engine.hpp"

namespace starpi {

// One instantiated generator of the ideal I, with named provenance:
//   F1  = v1 v2 v3                      (three commutators)
//   F2a = v1 u v2 - (v1 u v2)*          (u a single letter)
//   F2b = v1 v2 u - (v1 v2 u)*
//   F3a = Ja(y1,y2,y3) [y1,y2][y3,y4]
//   F3b = Ja(y1,y2,y3) [y1,y2,y4][y3,y5]
struct ConcreteGenerator {
    std::string family;
    NCPoly poly;
    std::vector<Variable> slots;
    // slots where substituting the unit gives a nonzero instance (the free
    // algebra is unitary, so a symmetric letter may receive 1)
    std::vector<bool> unit_ok;
};

// Cyclic symmetrization f + f(sigma) + f(sigma^2) over an ordered triple of
// symmetric variables, sigma the 3-cycle a -> b -> c -> a.
NCPoly jacobi_sum(const NCPoly& f, const std::array<Variable, 3>& triple);

// All generator families over length-2 commutators and both letter parities,
// deduplicated up to sign. Roughly 130 concrete polynomials.
std::vector<ConcreteGenerator> instantiate_generators();

struct ConsequenceOptions {
    // Restrict the boundary words multiplied on the left and right to
    // increasing order. Must not change the span; defaults on for n = 6.
    bool increasing_boundary = false;
};

ConsequenceOptions default_consequence_options(int n);

struct ConsequenceVector {
    QVector coords;        // scale-normalized (leading coefficient 1)
    std::string provenance;
};

// Spanning set of I intersected with P_V, generated by substituting
// parity-symmetrized multilinear words into the generator slots and
// multiplying by boundary words.
struct ConsequenceSet {
    MultilinearSpace space;
    std::vector<ConsequenceVector> vectors;
};

ConsequenceSet multilinear_consequences(const MultilinearSpace& space,
                                        const ConsequenceOptions& opts);
ConsequenceSet multilinear_consequences(const MultilinearSpace& space);

// Consequence span of I on one multilinear space, with membership testing.
class IdealContext {
  public:
    explicit IdealContext(const MultilinearSpace& space);
    IdealContext(const MultilinearSpace& space, const ConsequenceOptions& opts);

    const MultilinearSpace& space() const { return set_.space; }
    const ConsequenceSet& consequences() const { return set_; }
    int dim() const { return span_.rank(); }
    bool contains(const QVector& coords) const { return span_.contains(coords); }
    bool contains(const NCPoly& p) const;

  private:
    ConsequenceSet set_;
    EchelonSpan span_;
};

// Process-wide cache of contexts keyed by the variable set.
const IdealContext& ideal_context(const std::vector<Variable>& vars);

int ideal_dim(const MultilinearSpace& space);
bool ideal_contains(const MultilinearSpace& space, const NCPoly& p);

struct TheoremReport {
    int dim_ideal;
    int dim_kernel;
    bool equal;      // dim_ideal == dim_kernel
    bool contained;  // every consequence vector lies in the kernel span
};

// Compares the two independent pipelines: the span of I cap P_V against the
// evaluation kernel P_V cap Id(A,*).
TheoremReport verify_main_theorem(const MultilinearSpace& space,
                                  int degree_bound = kDefaultDegreeBound);

}  // namespace starpi
