#include "tropnorm/monomial_ideal.hpp"

#include <algorithm>
#include <set>

namespace tropnorm {

namespace {

bool divides(const ExpVector& a, const ExpVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<ExpVector> antichain(std::vector<ExpVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExpVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (j != i && divides(gens[j], gens[i]) && gens[j] != gens[i]) dominated = true;
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dim, std::vector<ExpVector> gens) : dim_(dim) {
  if (dim_ <= 0) throw std::invalid_argument("MonomialIdeal: dimension must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim_)
      throw std::invalid_argument("MonomialIdeal: generator dimension mismatch");
    for (long long e : g)
      if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
  }
  gens_ = antichain(std::move(gens));
}

bool MonomialIdeal::contains_monomial(const ExpVector& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("contains_monomial: dimension mismatch");
  for (const auto& g : gens_)
    if (divides(g, v)) return true;
  return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw std::invalid_argument("ideal_sum: dimension mismatch");
  std::vector<ExpVector> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.dim(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw std::invalid_argument("ideal_product: dimension mismatch");
  std::vector<ExpVector> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) gens.push_back(add(a, b));
  return MonomialIdeal(I.dim(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, long long m) {
  if (m < 0) throw std::invalid_argument("ideal_power: negative exponent");
  MonomialIdeal acc = MonomialIdeal::unit(I.dim());
  for (long long i = 0; i < m; ++i) acc = ideal_product(acc, I);
  return acc;
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  const int n = I.dim();
  ExpVector box(n, 0);
  std::vector<QVector> pts;
  for (const auto& g : I.gens()) {
    QVector q(n);
    for (int k = 0; k < n; ++k) {
      q[k] = g[k];
      box[k] = std::max(box[k], g[k]);
    }
    pts.push_back(std::move(q));
  }
  std::vector<QVector> rays;
  for (int k = 0; k < n; ++k) {
    QVector e(n, Rational(0));
    e[k] = 1;
    rays.push_back(std::move(e));
  }

  std::vector<ExpVector> gens;
  ExpVector v(n, 0);
  for (;;) {
    QVector q(n);
    for (int k = 0; k < n; ++k) q[k] = v[k];
    if (hull_membership(q, pts, rays)) gens.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == box[i]) {
      v[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<MonomialIdeal> ideal_powers(const MonomialIdeal& I, long long m_max) {
  if (m_max < 1) throw std::invalid_argument("ideal_powers: m_max must be positive");
  std::vector<MonomialIdeal> out;
  out.reserve(m_max);
  MonomialIdeal power = MonomialIdeal::unit(I.dim());
  for (long long m = 1; m <= m_max; ++m) {
    power = ideal_product(power, I);
    out.push_back(power);
  }
  return out;
}

std::optional<long long> dependence_oracle(const ExpVector& v,
                                           const std::vector<MonomialIdeal>& powers) {
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (static_cast<int>(v.size()) != powers[i].dim())
      throw std::invalid_argument("dependence_oracle: dimension mismatch");
    const long long m = static_cast<long long>(i) + 1;
    ExpVector mv(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) mv[k] = m * v[k];
    if (powers[i].contains_monomial(mv)) return m;
  }
  return std::nullopt;
}

std::optional<long long> dependence_oracle(const ExpVector& v, const MonomialIdeal& I,
                                           long long m_max) {
  if (static_cast<int>(v.size()) != I.dim())
    throw std::invalid_argument("dependence_oracle: dimension mismatch");
  if (m_max < 1) throw std::invalid_argument("dependence_oracle: m_max must be positive");
  return dependence_oracle(v, ideal_powers(I, m_max));
}

std::optional<long long> reduction_number(const MonomialIdeal& I, const MonomialIdeal& J,
                                          long long n_max) {
  if (I.dim() != J.dim()) throw std::invalid_argument("reduction_number: dimension mismatch");
  if (n_max < 0) throw std::invalid_argument("reduction_number: n_max must be nonnegative");
  for (const auto& g : I.gens())
    if (!J.contains_monomial(g))
      throw std::invalid_argument("reduction_number: I is not contained in J");
  MonomialIdeal jn = MonomialIdeal::unit(J.dim());  // J^n starting at n = 0
  for (long long n = 0; n <= n_max; ++n) {
    if (ideal_product(J, jn) == ideal_product(I, jn)) return n;
    jn = ideal_product(jn, J);
  }
  return std::nullopt;
}

SaturationResult saturate(const AffineMonoidGens& m) {
  if (m.dim <= 0) throw std::invalid_argument("saturate: dimension must be positive");
  if (m.degree_bound <= 0) throw std::invalid_argument("saturate: degree_bound must be positive");
  for (const auto& g : m.gens) {
    if (static_cast<int>(g.size()) != m.dim)
      throw std::invalid_argument("saturate: generator dimension mismatch");
    if (is_zero(g)) throw std::invalid_argument("saturate: zero generator");
  }
  const int n = m.dim;
  const long long D = m.degree_bound;
  const long long steps = n * D;

  // All N-combinations of the generators within the step budget.
  std::set<IntVec> reachable;
  reachable.insert(IntVec(n, 0));
  {
    std::set<IntVec> frontier = reachable;
    for (long long t = 0; t < steps && !frontier.empty(); ++t) {
      std::set<IntVec> next;
      for (const auto& p : frontier) {
        for (const auto& g : m.gens) {
          IntVec q = add(p, g);
          bool plausible = true;  // could still matter for a box point later
          for (int k = 0; k < n && plausible; ++k) {
            long long excess = std::max(q[k] - D, -D - q[k]);
            if (excess > 0) {
              // see how far remaining steps can pull this coordinate back
              long long pull = 0;
              for (const auto& h : m.gens)
                pull = std::max(pull, h[k] < 0 ? -h[k] : h[k]);
              if (excess > (steps - t - 1) * pull) plausible = false;
            }
          }
          if (plausible && reachable.insert(q).second) next.insert(q);
        }
      }
      frontier = std::move(next);
    }
  }

  SaturationResult out;
  out.degree_bound = D;
  out.generators = m.gens;

  // Cone membership is an exact feasibility LP over rational multipliers.
  const int r = static_cast<int>(m.gens.size());
  auto in_cone = [&](const IntVec& v) {
    if (r == 0) return is_zero(v);
    LPProblem lp;
    lp.sense = Sense::Maximize;
    lp.objective.assign(r, Rational(0));
    for (int k = 0; k < n; ++k) {
      IntVec row(r);
      for (int i = 0; i < r; ++i) row[i] = m.gens[i][k];
      lp.equalities.emplace_back(std::move(row), Rational(v[k]));
    }
    for (int i = 0; i < r; ++i) {
      IntVec e(r, 0);
      e[i] = -1;
      lp.constraints.emplace_back(std::move(e), Rational(0));
    }
    return lp_solve(lp).status == LPStatus::Optimal;
  };

  IntVec v(n, -D);
  for (;;) {
    if (in_cone(v) && !reachable.count(v)) out.missing.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == D) {
      v[i] = -D;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  out.saturated = out.missing.empty();
  out.generators.insert(out.generators.end(), out.missing.begin(), out.missing.end());
  return out;
}

bool is_saturated(const AffineMonoidGens& m) { return saturate(m).saturated; }

}  // namespace tropnorm
