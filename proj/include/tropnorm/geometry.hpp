#pragma once

#include "tropnorm/rational.hpp"

#include <utility>
#include <vector>

namespace tropnorm {

// Closed half-space {x : normal . x <= bound}. The constructor divides out the
// content of the normal, so stored normals are primitive integer vectors.
struct HalfSpace {
  IntVec normal;
  Rational bound;

  HalfSpace(IntVec n, Rational b);

  // Scales a rational row to integers (preserving direction) and primitivizes.
  static HalfSpace from_rational(const QVector& coeffs, const Rational& b);

  bool satisfied_by(const QVector& x) const { return dot(normal, x) <= bound; }
};

// Bounded rational polytope in H-representation. Construction does not check
// geometry; validate_polytope does, and HPolytope::validated is the checked
// factory used wherever nonempty + bounded is a precondition.
class HPolytope {
 public:
  HPolytope(int dim, std::vector<HalfSpace> halfspaces);

  // Runs the LP checks and throws std::invalid_argument unless the polytope is
  // nonempty and bounded (and full-dimensional, when require_full_dim is set).
  static HPolytope validated(int dim, std::vector<HalfSpace> halfspaces,
                             bool require_full_dim = false);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  bool contains(const QVector& x) const;
  bool checked() const { return checked_; }
  bool checked_full_dim() const { return checked_full_dim_; }

 private:
  int dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  bool checked_ = false;           // set only by validated(): nonempty and bounded
  bool checked_full_dim_ = false;  // validated() with require_full_dim
};

enum class Sense { Minimize, Maximize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPProblem {
  Sense sense = Sense::Maximize;
  QVector objective;
  std::vector<HalfSpace> constraints;                 // normal . x <= bound
  std::vector<std::pair<IntVec, Rational>> equalities;  // row . x == rhs

  int dim() const { return static_cast<int>(objective.size()); }
};

// dual holds one multiplier per row, inequality rows first, then equality
// rows, and certifies the outcome by direct arithmetic. Write chat = objective
// when maximizing and -objective when minimizing, and vhat likewise for the
// reported value; then:
//   Optimal:    dual >= 0 on inequality rows, sum dual_r a_r = chat,
//               sum dual_r b_r = vhat, and the witness point is feasible with
//               objective value equal to `value`.
//   Infeasible: dual >= 0 on inequality rows, sum dual_r a_r = 0,
//               sum dual_r b_r < 0.
//   Unbounded:  no certificate carried.
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value = 0;
  QVector witness_point;
  QVector dual;
};

// Exact two-phase primal simplex with Bland's rule; never returns an
// approximate answer.
LPResult lp_solve(const LPProblem& problem);

// Checks the certificate conventions above with exact arithmetic.
bool verify_certificate(const LPProblem& problem, const LPResult& result);

struct ValidationReport {
  bool nonempty = false;
  bool bounded = false;
  bool full_dim = false;
};

ValidationReport validate_polytope(const HPolytope& p);

struct PLMinimum {
  Rational value;
  QVector point;  // a minimizer in the polytope
};

// Exact minimum over delta of max_j(slope_j . x + coeff_j) via the epigraph
// LP. Throws std::invalid_argument when terms is empty or delta is empty or
// unbounded.
PLMinimum min_convex_pl(const std::vector<std::pair<IntVec, Rational>>& terms,
                        const HPolytope& delta);

// Membership of v in conv(points) + cone(rays), decided by feasibility LP.
// Throws std::invalid_argument when points is empty or dimensions disagree.
bool hull_membership(const QVector& v, const std::vector<QVector>& points,
                     const std::vector<QVector>& rays);

// Exact vertex enumeration for cell output; dim 2 results arrive in boundary
// order. Supported for dim <= 2 only (throws otherwise).
std::vector<QVector> polytope_vertices(const HPolytope& p);

}  // namespace tropnorm
