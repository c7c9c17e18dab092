#pragma once

#include "tropnorm/geometry.hpp"

#include <map>
#include <optional>

namespace tropnorm {

// The affine function p -> slope . p + coeff, an element of the slope group.
struct AffineMonomial {
  IntVec slope;
  Rational coeff;
  bool operator==(const AffineMonomial&) const = default;
};

// Formal finite join of affine monomials: an element of the free semiring.
// At most one term per slope (duplicates merge to the larger coefficient,
// forced by idempotence); the empty join is bottom (-infinity).
class TropPoly {
 public:
  explicit TropPoly(int dim);
  TropPoly(int dim, const std::vector<AffineMonomial>& monomials);

  int dim() const { return dim_; }
  bool is_bottom() const { return terms_.empty(); }
  const std::map<IntVec, Rational>& terms() const { return terms_; }
  std::vector<AffineMonomial> term_list() const;  // lexicographic by slope

  bool operator==(const TropPoly&) const = default;

 private:
  int dim_;
  std::map<IntVec, Rational> terms_;
};

TropPoly join(const TropPoly& f, const TropPoly& g);
TropPoly plus(const TropPoly& f, const TropPoly& g);
// m-fold plus of f with itself; scale(0, f) is the multiplicative identity.
TropPoly scale(long long m, const TropPoly& f);
// nullopt encodes -infinity (the empty polynomial).
std::optional<Rational> eval(const TropPoly& f, const QVector& p);

struct MonoidConstraint {
  IntVec F;        // primitive after MonoidPair construction
  Rational lambda;
};

// A bounded full-dimensional rational polytope presented by F_i . p <= lambda_i,
// together with the monoid Q+ it cuts out. Constraints are primitivized and the
// polytope validated (nonempty, bounded, full-dimensional) on construction.
class MonoidPair {
 public:
  MonoidPair(int dim, std::vector<MonoidConstraint> constraints);

  int dim() const { return dim_; }
  const std::vector<MonoidConstraint>& constraints() const { return constraints_; }
  const HPolytope& polytope() const { return delta_; }

 private:
  int dim_;
  std::vector<MonoidConstraint> constraints_;
  HPolytope delta_;
};

enum class Tri { Yes, No, Undetermined };

// Witness for membership of the affine function d . p + mu in Q+:
//   sum_i a_i F_i = d   and   c = mu + sum_i a_i lambda_i <= 0,
// so that d . p + mu = sum_i a_i (F_i . p - lambda_i) + c, a nonnegative
// integer combination of the defining forms plus a nonpositive constant.
struct MonoidWitness {
  std::vector<long long> a;
  Rational c;
};

struct MembershipAnswer {
  Tri status = Tri::Undetermined;
  std::optional<MonoidWitness> witness;  // when Yes
  std::optional<QVector> farkas;         // when No: dual for membership_relaxation
};

// The rational relaxation (a in Q^r nonnegative, no bound) as an explicit LP;
// its infeasibility certificate is the proof behind a definitive No.
LPProblem membership_relaxation(const IntVec& d, const Rational& mu, const MonoidPair& pair);

// Decides d . p + mu in Q+ by bounded enumeration of a in N^r with
// sum a_i <= bound, pruned by the rational relaxation. Yes and No are exact;
// Undetermined means the bound was exhausted with the relaxation feasible.
MembershipAnswer monoid_member(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                               long long bound);

bool verify_monoid_witness(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                           const MonoidWitness& w);
bool verify_membership_refutation(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                                  const QVector& farkas);

// Record of one term-vs-term decision inside syntactic_leq.
struct TermComparison {
  AffineMonomial lhs;                     // term of f being bounded
  std::optional<AffineMonomial> matched;  // term of g that admits it (when Yes)
  MembershipAnswer answer;                // the Yes answer, or a refutation
};

struct SyntacticComparison {
  Tri verdict = Tri::Undetermined;
  std::vector<TermComparison> terms;
};

// The syntactic (pre-normalization) order: f <= g iff every term of f is
// Q+-below some term of g. No requires a definitive blanket refutation of one
// term of f against every term of g.
Tri syntactic_leq(const TropPoly& f, const TropPoly& g, const MonoidPair& pair, long long bound);
SyntacticComparison syntactic_leq_detail(const TropPoly& f, const TropPoly& g,
                                         const MonoidPair& pair, long long bound);
Tri syntactic_eq(const TropPoly& f, const TropPoly& g, const MonoidPair& pair, long long bound);

}  // namespace tropnorm
