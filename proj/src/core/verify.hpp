#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace eqcurv {

struct SuiteConfig {
  std::vector<int> dims{3, 4};
  /// Empty: (n,0) and (n-1,1) for every n in dims. Otherwise each signature is
  /// paired with the dimension it adds up to.
  std::vector<std::pair<int, int>> signatures;
  int samples = 32;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  /// Restrict to these check names; empty runs everything.
  std::vector<std::string> only;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  /// Floating checks compare worst_residual < tol; structural checks compare
  /// integer or verdict data and ignore tol.
  bool floating = true;
  std::vector<std::string> failures;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::vector<std::string> check_names();

/// Throws InvalidArgument for unknown check names or signatures that match no
/// requested dimension.
SuiteReport run_invariant_suite(const SuiteConfig& config);

/// check-name -> {pass, worst_residual, config}.
nlohmann::json suite_report_to_json(const SuiteReport& report);

} // namespace eqcurv
