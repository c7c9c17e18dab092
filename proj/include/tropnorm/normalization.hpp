#pragma once

#include "tropnorm/free_semiring.hpp"

namespace tropnorm {

// The canonical (minimal essential) representative of a tropical polynomial
// as a function on the pair's polytope: every slope strictly wins on an open
// subset, every coefficient is saturated. Two polynomials have equal canonical
// forms exactly when they agree pointwise on the polytope.
struct CanonicalForm {
  std::map<IntVec, Rational> terms;
  MonoidPair context;

  TropPoly poly() const;
  bool same_terms(const CanonicalForm& other) const { return terms == other.terms; }
};

// Exact pointwise order of evaluations on delta: one epigraph LP per term.
bool pointwise_leq(const TropPoly& f, const TropPoly& g, const HPolytope& delta);
bool pointwise_eq(const TropPoly& f, const TropPoly& g, const HPolytope& delta);

// Largest q such that k . p + q <= ev f everywhere on delta.
Rational saturate_coeff(const TropPoly& f, const IntVec& k, const HPolytope& delta);

// Slopes of f whose saturated term strictly beats all others somewhere on
// delta (positive-margin LP); delta must be full-dimensional. Sorted
// lexicographically.
std::vector<IntVec> essential_slopes(const TropPoly& f, const HPolytope& delta);

CanonicalForm canonical_form(const TropPoly& f, const MonoidPair& pair);

// Answer to "is the principal ideal of f integrally closed, scanning tangent
// monomials out to the given slope radius?". No carries the offending tangent
// monomial; Undetermined means some membership search hit its bound.
struct ClosureAnswer {
  Tri status = Tri::Undetermined;
  std::optional<AffineMonomial> witness;  // when No: a tangent monomial not below f
};

ClosureAnswer is_integrally_closed_elt(const TropPoly& f, const MonoidPair& pair,
                                       long long radius, long long bound);

// Certificate that scale(n, x v y) <= scale(n-1, x v y) + y, the reduction
// inequality exhibiting x as integral over y.
struct DependenceWitness {
  long long n = 0;
  SyntacticComparison certificate;
};

struct IntegralOverResult {
  std::optional<DependenceWitness> witness;
  // when NotFound: the largest n whose reduction inequality was definitively
  // refuted, with the refuting comparison
  std::optional<long long> refuted_at;
  std::optional<SyntacticComparison> refutation;
};

IntegralOverResult integral_over(const TropPoly& x, const TropPoly& y, const MonoidPair& pair,
                                 long long n_max, long long bound);

// Conformance probe: adding h must not change whether f and g agree on delta.
// Returns pointwise_eq(f+h, g+h) == pointwise_eq(f, g); always true in a
// cancellative function semiring.
bool cancels(const TropPoly& f, const TropPoly& g, const TropPoly& h, const MonoidPair& pair);

// Linearity cell of one essential slope: where it attains the max on delta.
struct LinearityCell {
  IntVec slope;
  Rational coeff;
  std::vector<HalfSpace> region;    // delta rows plus domination rows
  std::vector<QVector> vertices;    // filled for dim <= 2
};

std::vector<LinearityCell> linearity_cells(const TropPoly& f, const MonoidPair& pair);

}  // namespace tropnorm
