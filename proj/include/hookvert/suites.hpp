#ifndef HOOKVERT_SUITES_HPP
#define HOOKVERT_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookvert/config.hpp"
#include "hookvert/constructions.hpp"
#include "hookvert/hook_module.hpp"

namespace hookvert {

struct SuiteParams {
  long p = 3;
  int n = 0;
  int d = 0;
  std::vector<int> m;  // E(m_1,…,m_t) when a suite needs one
  int samples = 20;
  std::uint64_t seed = 0;
};

struct SuiteFailure {
  std::string check;
  nlohmann::json witness;
};

struct VerifySuiteResult {
  std::string suite;
  nlohmann::json parameters;
  std::uint64_t checks_run = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0;  // human output only, never serialized

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Run one named suite ("lemma-4.2", …, "lemma-3.9"). Throws
/// std::invalid_argument for unknown names or inapplicable parameters and
/// BudgetExceeded past the budget.
VerifySuiteResult run_suite(const std::string& name, const SuiteParams& params,
                            const Budget& budget = Budget{});

/// One-line statement of what a suite checks, for the human-readable report.
std::string suite_statement(const std::string& name);

/// E(1, n_2, …, n_r) for n = p + Σ_{i≥2} n_i p^i (requires the p-adic digits
/// of n to be n_0 = 0, n_1 = 1).
GroupDecomposition regular_E_from_digits(int n, long p);

}  // namespace hookvert

#endif
