#pragma once
// Cross-check suite behind the `verify` subcommand and the acceptance
// runner. Every check compares independent computation paths; full scale is
// the acceptance scale, quick scale keeps the same tolerances with fewer
// draws.

#include <cstdint>
#include <string>
#include <vector>

namespace qtherm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst deviations against their tolerances
};

struct VerifyOptions {
  bool full_scale = false;
  // Run only checks whose name contains this substring; empty runs all.
  std::string filter;
  // Testing hook: flips a sign in the internal population-recursion
  // reference. The fixed-point and closed-form-dynamics checks must fail
  // under it, proving the harness can detect a broken recursion.
  bool perturb_recursion = false;
  std::uint64_t seed = 20260817;
};

// Throws UsageError when the filter matches no check.
std::vector<CheckResult> run_checks(const VerifyOptions& opts);

std::vector<std::string> check_names();

}  // namespace qtherm
