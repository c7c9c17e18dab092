#pragma once

#include "tropnorm/geometry.hpp"

namespace tropnorm {

struct BruteForceLP {
  LPStatus status = LPStatus::Infeasible;
  Rational value = 0;
  std::vector<QVector> vertices;  // all basic feasible points found
};

// Test-side oracle: intersects constraint subsets by Gaussian elimination,
// keeps feasible intersection points, and takes the best objective value over
// them. Shares no code with lp_solve, which is the point: the two routes must
// agree on bounded instances.
//
// Precondition: the feasible region must be bounded (say, by including box
// rows). On unbounded regions the vertex maximum is meaningless and the
// oracle's answer is unspecified.
BruteForceLP brute_force_lp(const LPProblem& problem);

}  // namespace tropnorm
