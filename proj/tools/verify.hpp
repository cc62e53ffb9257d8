#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sgr::cli {

struct CheckResult {
  std::string name;
  std::string statement;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // empty when passed
};

struct VerifyOptions {
  std::size_t d_max = 4;
  std::size_t r_max = 5;
  /// When set, the named check perturbs the first implementation-side value it
  /// compares, which must make that check (and only that check) fail.
  std::optional<std::string> inject_fault;
};

/// Names of every check in report order.
const std::vector<std::string>& check_names();

/// Runs every check over 1 <= d <= d_max, 0 <= r <= r_max. A failing check
/// stops at its first counterexample. Throws UsageError for an unknown
/// inject_fault name.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace sgr::cli
