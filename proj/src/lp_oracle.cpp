#include "tropnorm/lp_oracle.hpp"

#include <algorithm>
#include <optional>

namespace tropnorm {

namespace {

// Unique solution of rows . x = rhs, or nullopt when the system is singular
// or inconsistent. Plain fraction-aware Gaussian elimination.
std::optional<QVector> solve_square(std::vector<std::pair<QVector, Rational>> rows, int n) {
  const int m = static_cast<int>(rows.size());
  int rank = 0;
  std::vector<int> pivot_col(m, -1);
  for (int col = 0; col < n && rank < m; ++col) {
    int sel = -1;
    for (int r = rank; r < m; ++r)
      if (rows[r].first[col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    const Rational piv = rows[rank].first[col];
    for (int c = 0; c < n; ++c) rows[rank].first[c] /= piv;
    rows[rank].second /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r].first[col] == 0) continue;
      const Rational f = rows[r].first[col];
      for (int c = 0; c < n; ++c) rows[r].first[c] -= f * rows[rank].first[c];
      rows[r].second -= f * rows[rank].second;
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank < n) return std::nullopt;
  for (int r = rank; r < m; ++r)
    if (rows[r].second != 0) return std::nullopt;
  QVector x(n);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rows[r].second;
  return x;
}

bool feasible(const LPProblem& p, const QVector& x) {
  for (const auto& h : p.constraints)
    if (!h.satisfied_by(x)) return false;
  for (const auto& e : p.equalities)
    if (dot(e.first, x) != e.second) return false;
  return true;
}

}  // namespace

BruteForceLP brute_force_lp(const LPProblem& problem) {
  const int n = problem.dim();
  const int m1 = static_cast<int>(problem.constraints.size());

  std::vector<std::pair<QVector, Rational>> base;
  for (const auto& e : problem.equalities) {
    QVector row(n);
    for (int k = 0; k < n; ++k) row[k] = e.first[k];
    base.emplace_back(std::move(row), e.second);
  }

  BruteForceLP out;
  std::vector<int> subset;
  // Every vertex of a pointed region is cut out by the equalities plus at
  // most n tight inequalities, so subsets up to size n suffice.
  auto visit = [&](const std::vector<int>& chosen) {
    auto rows = base;
    for (int idx : chosen) {
      QVector row(n);
      for (int k = 0; k < n; ++k) row[k] = problem.constraints[idx].normal[k];
      rows.emplace_back(std::move(row), problem.constraints[idx].bound);
    }
    auto x = solve_square(std::move(rows), n);
    if (x && feasible(problem, *x)) out.vertices.push_back(std::move(*x));
  };

  auto recurse = [&](auto&& self, int start, int remaining) -> void {
    visit(subset);
    if (remaining == 0) return;
    for (int i = start; i < m1; ++i) {
      subset.push_back(i);
      self(self, i + 1, remaining - 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0, n);

  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());

  if (out.vertices.empty()) {
    out.status = LPStatus::Infeasible;
    return out;
  }
  out.status = LPStatus::Optimal;
  bool first = true;
  for (const auto& v : out.vertices) {
    Rational val = dot(problem.objective, v);
    bool better = problem.sense == Sense::Maximize ? val > out.value : val < out.value;
    if (first || better) out.value = val;
    first = false;
  }
  return out;
}

}  // namespace tropnorm
