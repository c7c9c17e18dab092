#include "tropnorm/normalization.hpp"

#include <algorithm>

namespace tropnorm {

TropPoly CanonicalForm::poly() const {
  std::vector<AffineMonomial> ms;
  ms.reserve(terms.size());
  for (const auto& [s, c] : terms) ms.push_back({s, c});
  return TropPoly(context.dim(), ms);
}

namespace {

using TermVec = std::vector<std::pair<IntVec, Rational>>;

TermVec shifted_terms(const TermVec& terms, const IntVec& k, const Rational& c) {
  TermVec out;
  out.reserve(terms.size());
  for (const auto& [s, q] : terms) out.emplace_back(sub(s, k), q - c);
  return out;
}

// A term whose lifted point (slope, coeff) lies in conv(the other lifted
// points) pushed down the vertical ray never exceeds the max of the others at
// any point of R^n. Dropping such terms changes no pointwise quantity, so the
// per-slope LPs below run on the upper-hull vertices only; this is what keeps
// canonical forms of n-fold powers from scaling with the full Minkowski
// expansion. Sequential removal is sound: domination is transitive through
// already-removed points.
TermVec dominant_terms(const TropPoly& f) {
  TermVec all(f.terms().begin(), f.terms().end());
  if (all.size() <= 2) return all;  // distinct slopes cannot dominate pairwise
  const int n = f.dim();
  const std::size_t T = all.size();
  std::vector<QVector> lifted(T);
  for (std::size_t i = 0; i < T; ++i) {
    QVector q(n + 1);
    for (int j = 0; j < n; ++j) q[j] = all[i].first[j];
    q[n] = all[i].second;
    lifted[i] = std::move(q);
  }
  QVector down(n + 1, Rational(0));
  down[n] = -1;

  // Membership LPs scale with the candidate set, so the support is grown
  // incrementally: seed it with direction maximizers (hull vertices when
  // unique), admit each further point only if the current support fails to
  // dominate it, then prune to a fixpoint. Transitivity of domination keeps
  // every removal valid as the support changes.
  std::vector<char> alive(T, 1), in_support(T, 0);
  std::vector<std::size_t> support;
  auto seed = [&](const QVector& w) {
    std::size_t best = 0;
    Rational bv;
    bool have = false;
    for (std::size_t i = 0; i < T; ++i) {
      Rational val = dot(w, lifted[i]);
      if (!have || val > bv) {
        have = true;
        bv = std::move(val);
        best = i;
      }
    }
    if (!in_support[best]) {
      in_support[best] = 1;
      support.push_back(best);
    }
  };
  {
    QVector w(n + 1, Rational(0));
    w[n] = 1;
    seed(w);  // largest coefficient
    for (int k = 0; k < n; ++k) {
      for (int sgn : {1, -1}) {
        QVector wk(n + 1, Rational(0));
        wk[k] = 8 * sgn;  // extreme along each slope axis, tilted upward
        wk[n] = 1;
        seed(wk);
      }
    }
  }
  auto dominated_by_support = [&](std::size_t i) {
    std::vector<QVector> pts;
    for (std::size_t s : support)
      if (s != i && alive[s]) pts.push_back(lifted[s]);
    if (pts.empty()) return false;
    return hull_membership(lifted[i], pts, {down});
  };
  auto prune_support = [&] {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i : support) {
        if (!alive[i]) continue;
        if (dominated_by_support(i)) {
          alive[i] = 0;
          changed = true;
        }
      }
    }
  };
  for (std::size_t i = 0; i < T; ++i) {
    if (in_support[i]) continue;
    if (dominated_by_support(i)) {
      alive[i] = 0;
    } else {
      in_support[i] = 1;
      support.push_back(i);
      // an admitted point can retire earlier support members; pruning right
      // away keeps every later membership LP small
      prune_support();
    }
  }
  prune_support();

  TermVec out;
  for (std::size_t i = 0; i < T; ++i)
    if (alive[i]) out.push_back(std::move(all[i]));
  return out;
}

void require_dims(const TropPoly& f, const HPolytope& delta, const char* op) {
  if (f.dim() != delta.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

bool pointwise_leq(const TropPoly& f, const TropPoly& g, const HPolytope& delta) {
  require_dims(f, delta, "pointwise_leq");
  require_dims(g, delta, "pointwise_leq");
  if (f.is_bottom()) return true;
  if (g.is_bottom()) return false;
  TermVec rows = dominant_terms(g);
  for (const auto& [s, c] : dominant_terms(f)) {
    // min over delta of ev g - (s . p + c)
    if (min_convex_pl(shifted_terms(rows, s, c), delta).value < 0) return false;
  }
  return true;
}

bool pointwise_eq(const TropPoly& f, const TropPoly& g, const HPolytope& delta) {
  return pointwise_leq(f, g, delta) && pointwise_leq(g, f, delta);
}

Rational saturate_coeff(const TropPoly& f, const IntVec& k, const HPolytope& delta) {
  require_dims(f, delta, "saturate_coeff");
  if (f.is_bottom()) throw std::invalid_argument("saturate_coeff: no minorant of -infinity");
  if (static_cast<int>(k.size()) != f.dim())
    throw std::invalid_argument("saturate_coeff: slope dimension mismatch");
  return min_convex_pl(shifted_terms(dominant_terms(f), k, Rational(0)), delta).value;
}

namespace {

// Shared engine: saturated coefficients of the undominated slopes, then the
// strict-win LP per slope. Returns the canonical (slope, coeff) map.
std::map<IntVec, Rational> canonical_terms(const TropPoly& f, const HPolytope& delta,
                                           const char* op) {
  require_dims(f, delta, op);
  if (f.is_bottom()) throw std::invalid_argument(std::string(op) + ": empty polynomial");
  if (!delta.checked_full_dim()) {
    ValidationReport rep = validate_polytope(delta);
    if (!rep.nonempty || !rep.bounded || !rep.full_dim)
      throw std::invalid_argument(std::string(op) +
                                  ": polytope must be nonempty, bounded and full-dimensional");
  }
  const int n = delta.dim();

  // Dominated slopes are inessential and their LP rows are implied by the
  // rest, so everything below runs on the upper-hull terms only.
  TermVec dom = dominant_terms(f);
  TermVec saturated;
  for (const auto& [s, c] : dom)
    saturated.emplace_back(s, min_convex_pl(shifted_terms(dom, s, Rational(0)), delta).value);

  std::map<IntVec, Rational> out;
  if (saturated.size() == 1) {
    out.emplace(saturated[0].first, saturated[0].second);
    return out;
  }

  for (const auto& [k, lk] : saturated) {
    // maximize t with (k . p + lambda*_k) - (k' . p + lambda*_k') >= t on delta
    LPProblem lp;
    lp.sense = Sense::Maximize;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[n] = 1;
    for (const auto& h : delta.halfspaces()) {
      IntVec row = h.normal;
      row.push_back(0);
      lp.constraints.emplace_back(std::move(row), h.bound);
    }
    for (const auto& [k2, lk2] : saturated) {
      if (k2 == k) continue;
      IntVec row = sub(k2, k);
      row.push_back(1);
      lp.constraints.emplace_back(std::move(row), lk - lk2);
    }
    LPResult r = lp_solve(lp);
    if (r.status == LPStatus::Optimal && r.value > 0) out.emplace(k, lk);
  }
  return out;
}

}  // namespace

std::vector<IntVec> essential_slopes(const TropPoly& f, const HPolytope& delta) {
  std::vector<IntVec> out;
  for (const auto& [k, c] : canonical_terms(f, delta, "essential_slopes")) out.push_back(k);
  return out;
}

CanonicalForm canonical_form(const TropPoly& f, const MonoidPair& pair) {
  if (f.dim() != pair.dim()) throw std::invalid_argument("canonical_form: dimension mismatch");
  CanonicalForm cf{{}, pair};
  if (f.is_bottom()) return cf;
  cf.terms = canonical_terms(f, pair.polytope(), "canonical_form");
  return cf;
}

ClosureAnswer is_integrally_closed_elt(const TropPoly& f, const MonoidPair& pair,
                                       long long radius, long long bound) {
  if (f.dim() != pair.dim())
    throw std::invalid_argument("is_integrally_closed_elt: dimension mismatch");
  if (radius <= 0) throw std::invalid_argument("is_integrally_closed_elt: radius must be positive");
  ClosureAnswer out;
  if (f.is_bottom()) {
    out.status = Tri::Yes;
    return out;
  }
  const int n = pair.dim();

  // Candidate slopes: lattice points of the convex hull of the slopes of f
  // together with their displacements by -radius * F_i.
  std::vector<QVector> hull_pts;
  IntVec lo(n), hi(n);
  bool first = true;
  auto add_point = [&](const IntVec& v) {
    QVector q(n);
    for (int k = 0; k < n; ++k) {
      q[k] = v[k];
      if (first || v[k] < lo[k]) lo[k] = v[k];
      if (first || v[k] > hi[k]) hi[k] = v[k];
    }
    first = false;
    hull_pts.push_back(std::move(q));
  };
  for (const auto& [s, c] : f.terms()) {
    add_point(s);
    for (const auto& cons : pair.constraints()) {
      IntVec shifted(n);
      for (int k = 0; k < n; ++k) shifted[k] = s[k] - radius * cons.F[k];
      add_point(shifted);
    }
  }

  bool undetermined = false;
  IntVec k = lo;
  for (;;) {
    QVector q(n);
    for (int i = 0; i < n; ++i) q[i] = k[i];
    if (hull_membership(q, hull_pts, {})) {
      TropPoly tangent(n, {{k, saturate_coeff(f, k, pair.polytope())}});
      Tri leq = syntactic_leq(tangent, f, pair, bound);
      if (leq == Tri::No) {
        out.status = Tri::No;
        out.witness = tangent.term_list()[0];
        return out;
      }
      if (leq == Tri::Undetermined) undetermined = true;
    }
    // advance odometer over the bounding box
    int i = n - 1;
    while (i >= 0 && k[i] == hi[i]) {
      k[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++k[i];
  }
  out.status = undetermined ? Tri::Undetermined : Tri::Yes;
  return out;
}

IntegralOverResult integral_over(const TropPoly& x, const TropPoly& y, const MonoidPair& pair,
                                 long long n_max, long long bound) {
  if (x.dim() != pair.dim() || y.dim() != pair.dim())
    throw std::invalid_argument("integral_over: dimension mismatch");
  if (n_max <= 0) throw std::invalid_argument("integral_over: n_max must be positive");

  IntegralOverResult out;
  const TropPoly xy = join(x, y);
  for (long long n = 1; n <= n_max; ++n) {
    SyntacticComparison cmp =
        syntactic_leq_detail(scale(n, xy), plus(scale(n - 1, xy), y), pair, bound);
    if (cmp.verdict == Tri::Yes) {
      out.witness = DependenceWitness{n, std::move(cmp)};
      return out;
    }
    if (cmp.verdict == Tri::No) {
      out.refuted_at = n;
      out.refutation = std::move(cmp);
    }
  }
  return out;
}

bool cancels(const TropPoly& f, const TropPoly& g, const TropPoly& h, const MonoidPair& pair) {
  if (h.is_bottom()) throw std::invalid_argument("cancels: h must be nonempty");
  const HPolytope& delta = pair.polytope();
  bool with_h = pointwise_eq(plus(f, h), plus(g, h), delta);
  bool without = pointwise_eq(f, g, delta);
  return with_h == without;
}

std::vector<LinearityCell> linearity_cells(const TropPoly& f, const MonoidPair& pair) {
  CanonicalForm cf = canonical_form(f, pair);
  std::vector<LinearityCell> cells;
  for (const auto& [k, lk] : cf.terms) {
    LinearityCell cell;
    cell.slope = k;
    cell.coeff = lk;
    cell.region = pair.polytope().halfspaces();
    for (const auto& [k2, lk2] : cf.terms) {
      if (k2 == k) continue;
      cell.region.emplace_back(sub(k2, k), lk - lk2);
    }
    if (pair.dim() <= 2)
      cell.vertices = polytope_vertices(HPolytope(pair.dim(), cell.region));
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace tropnorm
