// Acceptance gate: the ten release criteria, one verdict line each, with the
// sub-checks spelled out. Everything is exact (tolerance zero); the only
// numeric thresholds are the pinned runtime budgets and search bounds below.
//
// Criteria 1 and 2 assert inclusive canonical term sets ({(0,0),(2,0)} and
// {(0,0),(3,0)} on [0,1]) that conflict with strict essentiality: slope 0 ties
// with the winner only at the single point x = 0 of [0,1], and keeping a
// never-strictly-winning slope breaks the completeness law "canonical forms
// match iff the functions match" (0 v X v 2X and 2X agree everywhere on [0,1]
// but would canonicalize differently). Those two sub-checks are asserted as
// stated and are expected to fail; the same identities on [-1,1], where slope 0
// genuinely wins on an open set, pass alongside them. See README.md.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tropnorm/json_io.hpp"
#include "tropnorm/proptest.hpp"

using namespace tropnorm;

namespace {

// pinned budgets and bounds
constexpr long long kBudget1Ms = 1000;    // criteria 1 and 2
constexpr long long kBudget4Ms = 60000;   // criterion 4
constexpr long long kBudget5Ms = 60000;   // criterion 5
constexpr long long kBudget7Ms = 120000;  // criterion 7
constexpr long long kBudget9Ms = 30000;   // criterion 9
constexpr long long kSynBound = 8;        // membership enumeration, criteria 1-2
constexpr long long kMMax = 8;            // dependence oracle, criterion 7
constexpr long long kNMax = 10;           // reduction number, criterion 8
constexpr std::uint64_t kSeed = 1;

struct Gate {
  int criteria_failed = 0;
  bool undetermined_seen = false;
  std::vector<std::string> pending;
  bool current_ok = true;

  void sub(bool ok, const std::string& what) {
    pending.push_back(std::string("    [") + (ok ? "PASS" : "FAIL") + "] " + what);
    current_ok = current_ok && ok;
  }
  void saw(Tri t) {
    if (t == Tri::Undetermined) undetermined_seen = true;
  }
  void verdict(int id, const std::string& title) {
    std::printf("criterion %2d  %-46s %s\n", id, title.c_str(), current_ok ? "PASS" : "FAIL");
    for (const auto& l : pending) std::printf("%s\n", l.c_str());
    if (!current_ok) ++criteria_failed;
    pending.clear();
    current_ok = true;
  }
};

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

// dim-1 terms print as (slope,coeff), matching the stated sets; higher
// dimensions nest the slope tuple
std::string terms_str(const std::map<IntVec, Rational>& terms) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) s += ", ";
    first = false;
    std::string slope;
    for (std::size_t i = 0; i < k.size(); ++i) slope += (i ? "," : "") + std::to_string(k[i]);
    if (k.size() > 1) slope = "(" + slope + ")";
    s += "(" + slope + "," + rational_string(c) + ")";
  }
  return s + "}";
}

TropPoly zero_or_x() { return TropPoly(1, {{{0}, Rational(0)}, {{1}, Rational(0)}}); }
TropPoly zero_or_2x() { return TropPoly(1, {{{0}, Rational(0)}, {{2}, Rational(0)}}); }

MonoidPair unit_interval() { return MonoidPair(1, {{{-1}, Rational(0)}, {{1}, Rational(1)}}); }
MonoidPair symmetric_interval() { return MonoidPair(1, {{{-1}, Rational(1)}, {{1}, Rational(1)}}); }

std::string budget_line(long long ms, long long budget) {
  return "runtime " + std::to_string(ms) + " ms within " + std::to_string(budget) + " ms";
}

std::map<IntVec, Rational> make_terms(std::initializer_list<std::pair<IntVec, Rational>> xs) {
  std::map<IntVec, Rational> m;
  for (const auto& [k, c] : xs) m.emplace(k, c);
  return m;
}

// suite failures split by property substring; everything else goes to `rest`
int count_failures(const PropReport& rep, const std::string& needle, bool matching) {
  int n = 0;
  for (const auto& f : rep.failures)
    if ((f.property.find(needle) != std::string::npos) == matching) ++n;
  return n;
}

}  // namespace

int main() {
  Gate gate;
  std::printf("acceptance gate: exact checks, seed %llu\n\n",
              static_cast<unsigned long long>(kSeed));

  {  // 1. intro identity (1)
    auto t0 = std::chrono::steady_clock::now();
    MonoidPair pair = unit_interval();
    TropPoly doubled = scale(2, zero_or_x());
    TropPoly expanded(1, {{{0}, Rational(0)}, {{1}, Rational(0)}, {{2}, Rational(0)}});
    gate.sub(doubled == expanded, "scale(2, 0 v X) expands syntactically to 0 v X v 2X");

    CanonicalForm cf = canonical_form(doubled, pair);
    auto stated = make_terms({{{0}, Rational(0)}, {{2}, Rational(0)}});
    bool canonical_as_stated = cf.terms == stated;
    gate.sub(canonical_as_stated,
             "canonical terms on [0,1] equal {(0,0),(2,0)}  (got " + terms_str(cf.terms) +
                 "; slope 0 never strictly wins on [0,1])");
    CanonicalForm cf_sym = canonical_form(doubled, symmetric_interval());
    gate.sub(cf_sym.terms == stated,
             "supplementary: canonical terms on [-1,1] equal {(0,0),(2,0)}");

    gate.sub(pointwise_eq(doubled, zero_or_2x(), pair.polytope()),
             "pointwise_eq(scale(2, 0 v X), 0 v 2X) on [0,1]");
    long long ms = ms_since(t0);
    gate.sub(ms < kBudget1Ms, budget_line(ms, kBudget1Ms));
    gate.verdict(1, "intro identity (1)");
  }

  {  // 2. intro identity (2)
    auto t0 = std::chrono::steady_clock::now();
    MonoidPair pair = unit_interval();
    TropPoly lhs = plus(zero_or_2x(), zero_or_x());
    TropPoly rhs = scale(3, zero_or_x());
    Tri eq = syntactic_eq(lhs, rhs, pair, kSynBound);
    gate.saw(eq);
    gate.sub(eq == Tri::Yes, "syntactic_eq((0 v 2X) + (0 v X), scale(3, 0 v X)) = Yes");

    auto stated = make_terms({{{0}, Rational(0)}, {{3}, Rational(0)}});
    CanonicalForm cl = canonical_form(lhs, pair);
    CanonicalForm cr = canonical_form(rhs, pair);
    gate.sub(cl.terms == stated && cr.terms == stated,
             "both canonicalize on [0,1] to {(0,0),(3,0)}  (got " + terms_str(cl.terms) +
                 " and " + terms_str(cr.terms) + ")");
    CanonicalForm cl_sym = canonical_form(lhs, symmetric_interval());
    CanonicalForm cr_sym = canonical_form(rhs, symmetric_interval());
    gate.sub(cl_sym.terms == stated && cr_sym.terms == stated,
             "supplementary: both canonicalize on [-1,1] to {(0,0),(3,0)}");
    long long ms = ms_since(t0);
    gate.sub(ms < kBudget1Ms, budget_line(ms, kBudget1Ms));
    gate.verdict(2, "intro identity (2)");
  }

  {  // 3. square anomaly: the cross term of scale(2, X1 v X2) is inessential
    MonoidPair square(2, {{{-1, 0}, Rational(0)},
                          {{0, -1}, Rational(0)},
                          {{1, 0}, Rational(1)},
                          {{0, 1}, Rational(1)}});
    TropPoly x1_or_x2(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}});
    TropPoly doubled = scale(2, x1_or_x2);
    gate.sub(doubled.terms().count({1, 1}) == 1, "scale(2, X1 v X2) carries X1 + X2 syntactically");
    CanonicalForm cf = canonical_form(doubled, square);
    auto stated = make_terms({{{2, 0}, Rational(0)}, {{0, 2}, Rational(0)}});
    gate.sub(cf.terms == stated, "canonical terms are exactly {(2,0),(0,2)}");
    TropPoly direct(2, {{{2, 0}, Rational(0)}, {{0, 2}, Rational(0)}});
    gate.sub(cf.terms == canonical_form(direct, square).terms,
             "matches the canonical form of 2X1 v 2X2 term for term");
    gate.verdict(3, "square cross-term anomaly");
  }

  PropReport lemma, cancel, norm, mono, lp;

  {  // 4. lemma suite: binomial, divisibility, reduction-witness soundness
    auto t0 = std::chrono::steady_clock::now();
    lemma = run_proptest("lemma-3.1", kSeed, 200);
    long long ms = ms_since(t0);
    gate.sub(lemma.cases == 200 && lemma.failures.empty(),
             "200 seeded instances, 0 failures (" + std::to_string(lemma.checks) + " checks)");
    gate.sub(ms < kBudget4Ms, budget_line(ms, kBudget4Ms));
    gate.verdict(4, "scaling laws on random instances");
  }

  {  // 5. cancellativity
    auto t0 = std::chrono::steady_clock::now();
    cancel = run_proptest("cancellativity", kSeed, 200);
    long long ms = ms_since(t0);
    gate.sub(cancel.cases == 200 && cancel.failures.empty(),
             "200 seeded triples, cancels(...) = true throughout");
    gate.sub(ms < kBudget5Ms, budget_line(ms, kBudget5Ms));
    gate.verdict(5, "cancellativity");
  }

  {  // 6. equality-completeness
    norm = run_proptest("normalization", kSeed, 200);
    gate.sub(norm.cases == 200 && norm.failures.empty(),
             "200 constructed pairs, canonical equality = pointwise equality");
    gate.verdict(6, "equality-completeness");
  }

  {  // 7. monomial closure vs the dependence oracle
    auto t0 = std::chrono::steady_clock::now();
    mono = run_proptest("monomial-oracle", kSeed, 100);
    int oracle_failures = count_failures(mono, "reduction number", false);
    gate.sub(mono.cases == 100 && oracle_failures == 0,
             "100 seeded ideals, closure = oracle on every box lattice point");

    MonomialIdeal cubes(2, {{3, 0}, {0, 3}});
    MonomialIdeal cubes_closed = integral_closure(cubes);
    gate.sub(cubes_closed == MonomialIdeal(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}),
             "fixture (x^3, y^3): closure adds (2,1) and (1,2)");
    MonomialIdeal squares(2, {{2, 0}, {0, 2}});
    gate.sub(integral_closure(squares) == MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}),
             "fixture (x^2, y^2): closure adds (1,1)");
    auto m_cross = dependence_oracle({1, 1}, squares, kMMax);
    if (!m_cross) gate.undetermined_seen = true;
    gate.sub(m_cross.has_value() && *m_cross == 2, "oracle confirms (1,1) at power m = 2");
    long long ms = ms_since(t0);
    gate.sub(ms < kBudget7Ms, budget_line(ms, kBudget7Ms));
    gate.verdict(7, "monomial closure vs oracle");
  }

  {  // 8. reduction criterion on the same 100 ideals
    int reduction_failures = count_failures(mono, "reduction number", true);
    gate.sub(mono.cases == 100 && reduction_failures == 0,
             "reduction_number(I, closure(I), 10) succeeds for all 100 ideals");
    MonomialIdeal I(2, {{2, 0}, {0, 2}});
    MonomialIdeal J(2, {{2, 0}, {1, 1}, {0, 2}});
    auto n = reduction_number(I, J, kNMax);
    if (!n) gate.undetermined_seen = true;
    gate.sub(n.has_value() && *n == 1, "fixture I = (x^2, y^2), J = (x^2, xy, y^2): n = 1");
    gate.verdict(8, "reduction criterion");
  }

  {  // 9. LP engine vs brute force
    auto t0 = std::chrono::steady_clock::now();
    lp = run_proptest("lp-oracle", kSeed, 500);
    long long ms = ms_since(t0);
    gate.sub(lp.cases == 500 && lp.failures.empty(),
             "500 random LPs match vertex enumeration, all certificates verify");
    gate.sub(ms < kBudget9Ms, budget_line(ms, kBudget9Ms));
    gate.verdict(9, "exact LP engine");
  }

  {  // 10. honesty: nothing above passed through an Undetermined answer
    gate.sub(!gate.undetermined_seen, "every consulted three-valued answer was definitive");
    // the witness checks in the random suites are forced on half the cases, so
    // a silently-skipped conditional cannot carry a suite
    gate.sub(count_failures(lemma, "forced dependence", true) == 0,
             "dependence witnesses exist wherever dominance forces them");
    gate.verdict(10, "honesty");
  }

  std::printf("\n%d of 10 criteria passed\n", 10 - gate.criteria_failed);
  if (gate.criteria_failed)
    std::printf("the canonical-term sub-checks of criteria 1 and 2 assert inclusive term sets\n"
                "that contradict strict essentiality on [0,1]; see the header comment and README\n");
  return gate.criteria_failed == 0 ? 0 : 1;
}
