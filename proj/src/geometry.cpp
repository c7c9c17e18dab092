#include "tropnorm/geometry.hpp"

#include <algorithm>
#include <utility>

namespace tropnorm {

HalfSpace::HalfSpace(IntVec n, Rational b) : normal(std::move(n)), bound(std::move(b)) {
  if (is_zero(normal)) throw std::invalid_argument("HalfSpace: zero normal");
  long long g = content(normal);
  if (g > 1) {
    for (auto& v : normal) v /= g;
    bound /= g;
  }
}

HalfSpace HalfSpace::from_rational(const QVector& coeffs, const Rational& b) {
  BigInt mult = 1;
  for (const auto& c : coeffs) mult = lcm(mult, BigInt(denominator(c)));
  IntVec n(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigInt v = BigInt(numerator(coeffs[i])) * (mult / BigInt(denominator(coeffs[i])));
    n[i] = v.convert_to<long long>();
  }
  return HalfSpace(std::move(n), b * Rational(mult));
}

HPolytope::HPolytope(int dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ <= 0) throw std::invalid_argument("HPolytope: dimension must be positive");
  for (const auto& h : halfspaces_)
    if (static_cast<int>(h.normal.size()) != dim_)
      throw std::invalid_argument("HPolytope: half-space dimension mismatch");
}

HPolytope HPolytope::validated(int dim, std::vector<HalfSpace> halfspaces,
                               bool require_full_dim) {
  HPolytope p(dim, std::move(halfspaces));
  ValidationReport rep = validate_polytope(p);
  if (!rep.nonempty) throw std::invalid_argument("polytope is empty");
  if (!rep.bounded) throw std::invalid_argument("polytope is unbounded");
  if (require_full_dim && !rep.full_dim)
    throw std::invalid_argument("polytope is not full-dimensional");
  p.checked_ = true;
  p.checked_full_dim_ = require_full_dim;
  return p;
}

bool HPolytope::contains(const QVector& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("HPolytope::contains: dimension mismatch");
  for (const auto& h : halfspaces_)
    if (!h.satisfied_by(x)) return false;
  return true;
}

namespace {

// Dictionary-form simplex over exact rationals.
//
// Input rows mean  row . z = rhs  with z >= 0 over `nstruct` structural
// columns (rhs stored at index nstruct). The constructor scales rows to
// nonnegative rhs and appends one artificial column per row; the artificial
// block doubles as a basis-inverse tracker, which is what makes the
// multipliers below exact without keeping the original matrix around.
class Simplex {
 public:
  Simplex(std::vector<QVector> input, int nstruct)
      : nstruct_(nstruct), m_(static_cast<int>(input.size())), width_(nstruct + m_ + 1) {
    rows_.assign(m_, QVector(width_, Rational(0)));
    sigma_.assign(m_, 1);
    alive_.assign(m_, true);
    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      int sg = input[r][nstruct_] < 0 ? -1 : 1;
      sigma_[r] = sg;
      for (int j = 0; j < nstruct_; ++j) rows_[r][j] = Rational(sg) * input[r][j];
      rows_[r][nstruct_ + r] = 1;
      rows_[r][width_ - 1] = Rational(sg) * input[r][nstruct_];
      basis_[r] = nstruct_ + r;
    }
  }

  // Phase 1. On false the system is infeasible and y() carries the phase-1
  // multipliers; on true, artificials are driven out and redundant rows
  // retired, leaving a primal-feasible structural basis.
  bool phase1() {
    QVector cost(width_ - 1, Rational(0));
    for (int r = 0; r < m_; ++r) cost[nstruct_ + r] = 1;
    iterate(cost, false);
    if (objective_value(cost) > 0) {
      y_ = multipliers(cost);
      return false;
    }
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < nstruct_) continue;
      int j = 0;
      while (j < nstruct_ && rows_[r][j] == 0) ++j;
      if (j < nstruct_)
        pivot(r, j);
      else
        alive_[r] = false;  // 0 = 0: the row was implied by the others
    }
    return true;
  }

  // Phase 2 for min cost . z over structural columns; false means unbounded.
  bool phase2(const QVector& struct_cost) {
    QVector cost(width_ - 1, Rational(0));
    for (int j = 0; j < nstruct_; ++j) cost[j] = struct_cost[j];
    if (!iterate(cost, true)) return false;
    value_ = objective_value(cost);
    y_ = multipliers(cost);
    return true;
  }

  const Rational& value() const { return value_; }
  const QVector& y() const { return y_; }
  int sigma(int r) const { return sigma_[r]; }

  Rational solution(int j) const {
    for (int r = 0; r < m_; ++r)
      if (alive_[r] && basis_[r] == j) return rows_[r][width_ - 1];
    return 0;
  }

 private:
  Rational objective_value(const QVector& cost) const {
    Rational v = 0;
    for (int r = 0; r < m_; ++r)
      if (alive_[r]) v += cost[basis_[r]] * rows_[r][width_ - 1];
    return v;
  }

  // Row multipliers relative to the original (scaled) rows, read off the
  // artificial block: y_k = sum_r cost[basis_r] * B^-1[r][k]. Retired rows
  // keep a meaningful column, so certificates may cite them.
  QVector multipliers(const QVector& cost) const {
    QVector y(m_, Rational(0));
    for (int k = 0; k < m_; ++k)
      for (int r = 0; r < m_; ++r)
        if (alive_[r]) y[k] += cost[basis_[r]] * rows_[r][nstruct_ + k];
    return y;
  }

  // Bland's rule on both ends; finite by construction. False means an
  // improving ray was found (unbounded).
  bool iterate(const QVector& cost, bool bar_artificials) {
    const int limit = bar_artificials ? nstruct_ : width_ - 1;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit && enter < 0; ++j) {
        Rational cbar = cost[j];
        for (int r = 0; r < m_; ++r)
          if (alive_[r]) cbar -= cost[basis_[r]] * rows_[r][j];
        if (cbar < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best = 0;
      for (int r = 0; r < m_; ++r) {
        if (!alive_[r] || rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r][width_ - 1] / rows_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int j) {
    const Rational piv = rows_[r][j];
    for (int k = 0; k < width_; ++k) rows_[r][k] /= piv;
    for (int s = 0; s < m_; ++s) {
      if (s == r || !alive_[s] || rows_[s][j] == 0) continue;
      const Rational f = rows_[s][j];
      for (int k = 0; k < width_; ++k) rows_[s][k] -= f * rows_[r][k];
    }
    basis_[r] = j;
  }

  int nstruct_, m_, width_;
  std::vector<QVector> rows_;
  std::vector<int> basis_, sigma_;
  std::vector<bool> alive_;
  QVector y_;
  Rational value_ = 0;
};

}  // namespace

LPResult lp_solve(const LPProblem& problem) {
  const int n = problem.dim();
  if (n <= 0) throw std::invalid_argument("lp_solve: empty objective");
  for (const auto& h : problem.constraints)
    if (static_cast<int>(h.normal.size()) != n)
      throw std::invalid_argument("lp_solve: constraint dimension mismatch");
  for (const auto& e : problem.equalities)
    if (static_cast<int>(e.first.size()) != n)
      throw std::invalid_argument("lp_solve: equality dimension mismatch");

  const int m1 = static_cast<int>(problem.constraints.size());
  const int m2 = static_cast<int>(problem.equalities.size());
  const int m = m1 + m2;
  // Free variables split as x = u - v; one slack per inequality.
  const int nstruct = 2 * n + m1;

  std::vector<QVector> rows(m, QVector(nstruct + 1, Rational(0)));
  for (int i = 0; i < m1; ++i) {
    const auto& h = problem.constraints[i];
    for (int k = 0; k < n; ++k) {
      rows[i][k] = h.normal[k];
      rows[i][n + k] = -Rational(h.normal[k]);
    }
    rows[i][2 * n + i] = 1;
    rows[i][nstruct] = h.bound;
  }
  for (int j = 0; j < m2; ++j) {
    const auto& e = problem.equalities[j];
    for (int k = 0; k < n; ++k) {
      rows[m1 + j][k] = e.first[k];
      rows[m1 + j][n + k] = -Rational(e.first[k]);
    }
    rows[m1 + j][nstruct] = e.second;
  }

  Simplex sx(std::move(rows), nstruct);
  LPResult res;

  auto fill_dual = [&](QVector& dual) {
    dual.resize(m);
    for (int r = 0; r < m; ++r) dual[r] = -Rational(sx.sigma(r)) * sx.y()[r];
  };

  if (!sx.phase1()) {
    res.status = LPStatus::Infeasible;
    fill_dual(res.dual);
    return res;
  }

  QVector cost(nstruct, Rational(0));
  for (int k = 0; k < n; ++k) {
    Rational chat = problem.sense == Sense::Maximize ? problem.objective[k] : -problem.objective[k];
    cost[k] = -chat;
    cost[n + k] = chat;
  }
  if (!sx.phase2(cost)) {
    res.status = LPStatus::Unbounded;
    return res;
  }

  res.status = LPStatus::Optimal;
  const Rational vhat = -sx.value();
  res.value = problem.sense == Sense::Maximize ? vhat : -vhat;
  res.witness_point.resize(n);
  for (int k = 0; k < n; ++k) res.witness_point[k] = sx.solution(k) - sx.solution(n + k);
  fill_dual(res.dual);
  return res;
}

bool verify_certificate(const LPProblem& problem, const LPResult& result) {
  if (result.status == LPStatus::Unbounded) return true;
  const int n = problem.dim();
  const int m1 = static_cast<int>(problem.constraints.size());
  const int m2 = static_cast<int>(problem.equalities.size());
  if (static_cast<int>(result.dual.size()) != m1 + m2) return false;
  for (int i = 0; i < m1; ++i)
    if (result.dual[i] < 0) return false;

  QVector combo(n, Rational(0));
  Rational combo_rhs = 0;
  for (int i = 0; i < m1; ++i) {
    const auto& h = problem.constraints[i];
    for (int k = 0; k < n; ++k) combo[k] += result.dual[i] * h.normal[k];
    combo_rhs += result.dual[i] * h.bound;
  }
  for (int j = 0; j < m2; ++j) {
    const auto& e = problem.equalities[j];
    for (int k = 0; k < n; ++k) combo[k] += result.dual[m1 + j] * e.first[k];
    combo_rhs += result.dual[m1 + j] * e.second;
  }

  if (result.status == LPStatus::Infeasible) {
    for (int k = 0; k < n; ++k)
      if (combo[k] != 0) return false;
    return combo_rhs < 0;
  }

  const int sgn = problem.sense == Sense::Maximize ? 1 : -1;
  for (int k = 0; k < n; ++k)
    if (combo[k] != Rational(sgn) * problem.objective[k]) return false;
  if (combo_rhs != Rational(sgn) * result.value) return false;

  if (static_cast<int>(result.witness_point.size()) != n) return false;
  for (const auto& h : problem.constraints)
    if (!h.satisfied_by(result.witness_point)) return false;
  for (const auto& e : problem.equalities)
    if (dot(e.first, result.witness_point) != e.second) return false;
  return dot(problem.objective, result.witness_point) == result.value;
}

ValidationReport validate_polytope(const HPolytope& p) {
  ValidationReport rep;
  const int n = p.dim();

  LPProblem feas;
  feas.sense = Sense::Maximize;
  feas.objective.assign(n, Rational(0));
  feas.constraints = p.halfspaces();
  rep.nonempty = lp_solve(feas).status == LPStatus::Optimal;
  if (!rep.nonempty) {
    rep.bounded = true;  // vacuously
    rep.full_dim = false;
    return rep;
  }

  rep.bounded = true;
  for (int k = 0; k < n && rep.bounded; ++k) {
    for (Sense s : {Sense::Maximize, Sense::Minimize}) {
      LPProblem dir = feas;
      dir.sense = s;
      dir.objective[k] = 1;
      if (lp_solve(dir).status == LPStatus::Unbounded) {
        rep.bounded = false;
        break;
      }
    }
  }

  // Full-dimensional iff some point clears every wall by a positive margin:
  // maximize t subject to a_i . x + t <= b_i and t <= 1.
  LPProblem ball;
  ball.sense = Sense::Maximize;
  ball.objective.assign(n + 1, Rational(0));
  ball.objective[n] = 1;
  for (const auto& h : p.halfspaces()) {
    IntVec row = h.normal;
    row.push_back(1);
    ball.constraints.emplace_back(std::move(row), h.bound);
  }
  IntVec cap(n + 1, 0);
  cap[n] = 1;
  ball.constraints.emplace_back(std::move(cap), Rational(1));
  LPResult b = lp_solve(ball);
  rep.full_dim = b.status == LPStatus::Optimal && b.value > 0;
  return rep;
}

PLMinimum min_convex_pl(const std::vector<std::pair<IntVec, Rational>>& terms,
                        const HPolytope& delta) {
  if (terms.empty()) throw std::invalid_argument("min_convex_pl: no terms");
  if (!delta.checked()) {
    ValidationReport rep = validate_polytope(delta);
    if (!rep.nonempty) throw std::invalid_argument("min_convex_pl: polytope is empty");
    if (!rep.bounded) throw std::invalid_argument("min_convex_pl: polytope is unbounded");
  }
  const int n = delta.dim();

  // Epigraph LP in (x, t): minimize t with t >= slope_j . x + coeff_j on delta.
  LPProblem lp;
  lp.sense = Sense::Minimize;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = 1;
  for (const auto& h : delta.halfspaces()) {
    IntVec row = h.normal;
    row.push_back(0);
    lp.constraints.emplace_back(std::move(row), h.bound);
  }
  for (const auto& [slope, coeff] : terms) {
    if (static_cast<int>(slope.size()) != n)
      throw std::invalid_argument("min_convex_pl: term dimension mismatch");
    IntVec row = slope;
    row.push_back(-1);
    lp.constraints.emplace_back(std::move(row), -coeff);
  }
  LPResult r = lp_solve(lp);
  if (r.status != LPStatus::Optimal)
    throw std::invalid_argument("min_convex_pl: polytope must be nonempty and bounded");
  PLMinimum out;
  out.value = r.value;
  out.point.assign(r.witness_point.begin(), r.witness_point.begin() + n);
  return out;
}

namespace {

std::pair<IntVec, Rational> integer_equality(const QVector& row, const Rational& rhs) {
  BigInt mult = 1;
  for (const auto& c : row) mult = lcm(mult, BigInt(denominator(c)));
  mult = lcm(mult, BigInt(denominator(rhs)));
  IntVec out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    BigInt v = BigInt(numerator(row[i])) * (mult / BigInt(denominator(row[i])));
    out[i] = v.convert_to<long long>();
  }
  return {std::move(out), rhs * Rational(mult)};
}

}  // namespace

bool hull_membership(const QVector& v, const std::vector<QVector>& points,
                     const std::vector<QVector>& rays) {
  if (points.empty()) throw std::invalid_argument("hull_membership: no points");
  const int n = static_cast<int>(v.size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("hull_membership: point dimension mismatch");
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("hull_membership: ray dimension mismatch");

  const int np = static_cast<int>(points.size());
  const int nr = static_cast<int>(rays.size());

  // Feasibility in (mu, nu) >= 0: sum mu_i p_i + sum nu_j r_j = v, sum mu = 1.
  LPProblem lp;
  lp.sense = Sense::Maximize;
  lp.objective.assign(np + nr, Rational(0));
  for (int k = 0; k < n; ++k) {
    QVector row(np + nr);
    for (int i = 0; i < np; ++i) row[i] = points[i][k];
    for (int j = 0; j < nr; ++j) row[np + j] = rays[j][k];
    lp.equalities.push_back(integer_equality(row, v[k]));
  }
  IntVec ones(np + nr, 0);
  for (int i = 0; i < np; ++i) ones[i] = 1;
  lp.equalities.emplace_back(std::move(ones), Rational(1));
  for (int i = 0; i < np + nr; ++i) {
    IntVec e(np + nr, 0);
    e[i] = -1;
    lp.constraints.emplace_back(std::move(e), Rational(0));
  }
  return lp_solve(lp).status == LPStatus::Optimal;
}

std::vector<QVector> polytope_vertices(const HPolytope& p) {
  const int n = p.dim();
  if (n > 2) throw std::invalid_argument("polytope_vertices: dim > 2 not supported");
  const auto& hs = p.halfspaces();
  std::vector<QVector> found;

  if (n == 1) {
    for (const auto& h : hs) {
      QVector x{h.bound / h.normal[0]};
      if (p.contains(x)) found.push_back(std::move(x));
    }
  } else {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        Rational det = Rational(hs[i].normal[0]) * hs[j].normal[1] -
                       Rational(hs[i].normal[1]) * hs[j].normal[0];
        if (det == 0) continue;
        QVector x{(hs[i].bound * hs[j].normal[1] - hs[j].bound * hs[i].normal[1]) / det,
                  (Rational(hs[i].normal[0]) * hs[j].bound - Rational(hs[j].normal[0]) * hs[i].bound) / det};
        if (p.contains(x)) found.push_back(std::move(x));
      }
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  if (n == 2 && found.size() > 2) {
    QVector c(2, Rational(0));
    for (const auto& v : found) {
      c[0] += v[0];
      c[1] += v[1];
    }
    c[0] /= static_cast<int>(found.size());
    c[1] /= static_cast<int>(found.size());
    // Exact counterclockwise order around the centroid, starting from the
    // positive-x half-line.
    auto half = [&](const QVector& v) {
      Rational dy = v[1] - c[1];
      if (dy != 0) return dy > 0 ? 0 : 1;
      return v[0] - c[0] > 0 ? 0 : 1;
    };
    std::sort(found.begin(), found.end(), [&](const QVector& u, const QVector& w) {
      int hu = half(u), hw = half(w);
      if (hu != hw) return hu < hw;
      Rational cross = (u[0] - c[0]) * (w[1] - c[1]) - (u[1] - c[1]) * (w[0] - c[0]);
      return cross > 0;
    });
  }
  return found;
}

}  // namespace tropnorm
