#include "tropnorm/free_semiring.hpp"

#include <algorithm>

namespace tropnorm {

TropPoly::TropPoly(int dim) : dim_(dim) {
  if (dim_ <= 0) throw std::invalid_argument("TropPoly: dimension must be positive");
}

TropPoly::TropPoly(int dim, const std::vector<AffineMonomial>& monomials) : TropPoly(dim) {
  for (const auto& m : monomials) {
    if (static_cast<int>(m.slope.size()) != dim_)
      throw std::invalid_argument("TropPoly: term dimension mismatch");
    auto [it, inserted] = terms_.emplace(m.slope, m.coeff);
    if (!inserted && it->second < m.coeff) it->second = m.coeff;
  }
}

std::vector<AffineMonomial> TropPoly::term_list() const {
  std::vector<AffineMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back({s, c});
  return out;
}

namespace {

void require_same_dim(const TropPoly& f, const TropPoly& g, const char* op) {
  if (f.dim() != g.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

TropPoly join(const TropPoly& f, const TropPoly& g) {
  require_same_dim(f, g, "join");
  std::vector<AffineMonomial> all = f.term_list();
  for (const auto& [s, c] : g.terms()) all.push_back({s, c});
  return TropPoly(f.dim(), all);
}

TropPoly plus(const TropPoly& f, const TropPoly& g) {
  require_same_dim(f, g, "plus");
  if (f.is_bottom() || g.is_bottom()) return TropPoly(f.dim());
  std::vector<AffineMonomial> sums;
  sums.reserve(f.terms().size() * g.terms().size());
  for (const auto& [fs, fc] : f.terms())
    for (const auto& [gs, gc] : g.terms()) sums.push_back({add(fs, gs), fc + gc});
  return TropPoly(f.dim(), sums);
}

TropPoly scale(long long m, const TropPoly& f) {
  if (m < 0) throw std::invalid_argument("scale: negative exponent");
  TropPoly acc(f.dim(), {{IntVec(f.dim(), 0), Rational(0)}});
  for (long long i = 0; i < m; ++i) acc = plus(acc, f);
  return acc;
}

std::optional<Rational> eval(const TropPoly& f, const QVector& p) {
  if (static_cast<int>(p.size()) != f.dim())
    throw std::invalid_argument("eval: dimension mismatch");
  std::optional<Rational> best;
  for (const auto& [s, c] : f.terms()) {
    Rational v = dot(s, p) + c;
    if (!best || v > *best) best = v;
  }
  return best;
}

MonoidPair::MonoidPair(int dim, std::vector<MonoidConstraint> constraints)
    : dim_(dim),
      constraints_(std::move(constraints)),
      delta_([&] {
        std::vector<HalfSpace> hs;
        hs.reserve(constraints_.size());
        for (auto& c : constraints_) {
          // HalfSpace primitivizes; write the scaled pair back so the
          // generators F_i - lambda_i really use indivisible F_i.
          HalfSpace h(c.F, c.lambda);
          c.F = h.normal;
          c.lambda = h.bound;
          hs.push_back(std::move(h));
        }
        return HPolytope::validated(dim, std::move(hs), /*require_full_dim=*/true);
      }()) {}

LPProblem membership_relaxation(const IntVec& d, const Rational& mu, const MonoidPair& pair) {
  if (static_cast<int>(d.size()) != pair.dim())
    throw std::invalid_argument("monoid_member: dimension mismatch");
  const auto& cs = pair.constraints();
  const int r = static_cast<int>(cs.size());

  LPProblem lp;
  lp.sense = Sense::Maximize;
  lp.objective.assign(r, Rational(0));
  for (int k = 0; k < pair.dim(); ++k) {
    IntVec row(r);
    for (int i = 0; i < r; ++i) row[i] = cs[i].F[k];
    lp.equalities.emplace_back(std::move(row), Rational(d[k]));
  }
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = -1;
    lp.constraints.emplace_back(std::move(e), Rational(0));
  }
  // sum a_i lambda_i <= -mu, scaled to an integer normal
  QVector lam(r);
  for (int i = 0; i < r; ++i) lam[i] = cs[i].lambda;
  lp.constraints.push_back(HalfSpace::from_rational(lam, -mu));
  return lp;
}

MembershipAnswer monoid_member(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                               long long bound) {
  if (bound <= 0) throw std::invalid_argument("monoid_member: bound must be positive");
  if (static_cast<int>(d.size()) != pair.dim())
    throw std::invalid_argument("monoid_member: dimension mismatch");

  LPResult relax = lp_solve(membership_relaxation(d, mu, pair));
  if (relax.status == LPStatus::Infeasible) {
    MembershipAnswer out;
    out.status = Tri::No;
    out.farkas = relax.dual;
    return out;
  }

  const auto& cs = pair.constraints();
  const int r = static_cast<int>(cs.size());
  const int n = pair.dim();

  // Per-coordinate reach of one enumeration step, taken over the generators
  // still available from position i on; used to prune hopeless branches.
  std::vector<IntVec> reach(r + 1, IntVec(n, 0));
  for (int i = r - 1; i >= 0; --i) {
    for (int k = 0; k < n; ++k) {
      long long a = cs[i].F[k] < 0 ? -cs[i].F[k] : cs[i].F[k];
      reach[i][k] = std::max(reach[i + 1][k], a);
    }
  }

  std::vector<long long> a(r, 0);
  IntVec partial(n, 0);
  Rational lam_sum = 0;
  MembershipAnswer out;  // Undetermined unless the search succeeds

  auto dfs = [&](auto&& self, int i, long long used) -> bool {
    for (int k = 0; k < n; ++k) {
      long long gap = d[k] - partial[k];
      if (gap < 0) gap = -gap;
      if (gap > (bound - used) * reach[i][k]) return false;
    }
    if (i == r) {
      if (partial != d) return false;
      Rational c = mu + lam_sum;
      if (c > 0) return false;
      out.status = Tri::Yes;
      out.witness = MonoidWitness{a, c};
      return true;
    }
    for (long long v = 0; used + v <= bound; ++v) {
      a[i] = v;
      if (v > 0) {
        for (int k = 0; k < n; ++k) partial[k] += cs[i].F[k];
        lam_sum += cs[i].lambda;
      }
      if (self(self, i + 1, used + v)) return true;
    }
    // undo the increments applied across the loop
    long long applied = a[i];
    for (int k = 0; k < n; ++k) partial[k] -= applied * cs[i].F[k];
    lam_sum -= Rational(applied) * cs[i].lambda;
    a[i] = 0;
    return false;
  };
  dfs(dfs, 0, 0);
  return out;
}

bool verify_monoid_witness(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                           const MonoidWitness& w) {
  const auto& cs = pair.constraints();
  if (w.a.size() != cs.size()) return false;
  IntVec slope(pair.dim(), 0);
  Rational lam = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (w.a[i] < 0) return false;
    for (int k = 0; k < pair.dim(); ++k) slope[k] += w.a[i] * cs[i].F[k];
    lam += Rational(w.a[i]) * cs[i].lambda;
  }
  return slope == d && w.c == mu + lam && w.c <= 0;
}

bool verify_membership_refutation(const IntVec& d, const Rational& mu, const MonoidPair& pair,
                                  const QVector& farkas) {
  LPResult r;
  r.status = LPStatus::Infeasible;
  r.dual = farkas;
  return verify_certificate(membership_relaxation(d, mu, pair), r);
}

SyntacticComparison syntactic_leq_detail(const TropPoly& f, const TropPoly& g,
                                         const MonoidPair& pair, long long bound) {
  if (f.dim() != pair.dim() || g.dim() != pair.dim())
    throw std::invalid_argument("syntactic_leq: dimension mismatch");

  SyntacticComparison out;
  out.verdict = Tri::Yes;
  for (const auto& [fs, fc] : f.terms()) {
    TermComparison tc;
    tc.lhs = {fs, fc};
    bool found = false;
    bool all_no = true;
    for (const auto& [gs, gc] : g.terms()) {
      MembershipAnswer ans = monoid_member(sub(fs, gs), fc - gc, pair, bound);
      if (ans.status == Tri::Yes) {
        tc.matched = AffineMonomial{gs, gc};
        tc.answer = std::move(ans);
        found = true;
        break;
      }
      if (ans.status == Tri::No) {
        if (all_no) tc.answer = std::move(ans);  // keep the first refutation
      } else {
        all_no = false;
      }
    }
    if (found) {
      out.terms.push_back(std::move(tc));
      continue;
    }
    // g bottom counts as a blanket refutation: no affine term sits below -inf
    out.terms.push_back(std::move(tc));
    if (all_no) {
      out.verdict = Tri::No;
      return out;
    }
    out.verdict = Tri::Undetermined;
  }
  return out;
}

Tri syntactic_leq(const TropPoly& f, const TropPoly& g, const MonoidPair& pair, long long bound) {
  return syntactic_leq_detail(f, g, pair, bound).verdict;
}

Tri syntactic_eq(const TropPoly& f, const TropPoly& g, const MonoidPair& pair, long long bound) {
  Tri a = syntactic_leq(f, g, pair, bound);
  if (a == Tri::No) return Tri::No;
  Tri b = syntactic_leq(g, f, pair, bound);
  if (b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Undetermined;
}

}  // namespace tropnorm
