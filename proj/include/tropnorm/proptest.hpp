#pragma once

#include <cstdint>

#include "tropnorm/json_io.hpp"

namespace tropnorm {

struct PropFailure {
  int case_index = 0;
  std::string property;
  Json reproducer;  // full serialized inputs, enough to replay by hand
};

struct PropReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  long long checks = 0;  // individual assertions evaluated
  std::vector<PropFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Suites: semiring-laws, normalization, lemma-3.1, cancellativity,
// monomial-oracle, lp-oracle. Deterministic given (suite, seed, cases).
const std::vector<std::string>& proptest_suites();
PropReport run_proptest(const std::string& suite, std::uint64_t seed, int cases);

Json proptest_report_to_json(const PropReport& report);

}  // namespace tropnorm
