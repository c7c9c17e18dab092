#pragma once

#include "tropnorm/geometry.hpp"

#include <optional>

namespace tropnorm {

// Exponent vector of a monomial; componentwise nonnegative.
using ExpVector = IntVec;

// Monomial ideal given by its unique minimal generators (an antichain under
// componentwise <=, sorted lexicographically). Empty antichain = zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal(int dim, std::vector<ExpVector> gens);
  static MonomialIdeal zero(int dim) { return MonomialIdeal(dim, {}); }
  static MonomialIdeal unit(int dim) { return MonomialIdeal(dim, {ExpVector(dim, 0)}); }

  int dim() const { return dim_; }
  const std::vector<ExpVector>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  // v lies in the ideal iff some generator divides it (componentwise <=).
  bool contains_monomial(const ExpVector& v) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int dim_;
  std::vector<ExpVector> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_power(const MonomialIdeal& I, long long m);  // m >= 0; I^0 = unit

// Newton-polyhedron closure: lattice points of conv(gens) + R>=0^n inside the
// generator bounding box, minimalized. Zero ideal maps to itself.
MonomialIdeal integral_closure(const MonomialIdeal& I);

// Least m <= m_max with m * v in gens(I^m) + N^n, by pure lattice search
// through Minkowski powers; no LP involved. This is the module's independent
// cross-check against integral_closure.
std::optional<long long> dependence_oracle(const ExpVector& v, const MonomialIdeal& I,
                                           long long m_max);

// powers[m-1] = I^m for m = 1..m_max, for querying many points against one
// ideal without recomputing the Minkowski powers.
std::vector<MonomialIdeal> ideal_powers(const MonomialIdeal& I, long long m_max);
std::optional<long long> dependence_oracle(const ExpVector& v,
                                           const std::vector<MonomialIdeal>& powers);

// Least n <= n_max with J^{n+1} = I * J^n. Requires I contained in J.
std::optional<long long> reduction_number(const MonomialIdeal& I, const MonomialIdeal& J,
                                          long long n_max);

struct AffineMonoidGens {
  int dim = 0;
  std::vector<IntVec> gens;  // nonzero integer vectors
  long long degree_bound = 0;
};

struct SaturationResult {
  bool saturated = true;
  // lattice points of cone(gens) with coordinates in [-degree_bound,
  // degree_bound] that no N-combination within the step budget reaches
  std::vector<IntVec> missing;
  std::vector<IntVec> generators;  // original gens plus missing points
  long long degree_bound = 0;
};

// Bounded-degree saturation check: cone membership decided exactly by LP,
// N-reachability by breadth-first Minkowski accumulation over dim *
// degree_bound steps. Complete only up to the bound, which the result records.
SaturationResult saturate(const AffineMonoidGens& m);
bool is_saturated(const AffineMonoidGens& m);

}  // namespace tropnorm
