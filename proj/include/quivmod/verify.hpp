#pragma once

#include <string>
#include <vector>

#include "quivmod/reineke.hpp"

namespace quivmod {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The named computational suites, in canonical order:
/// reineke, mps, scaling, closed-forms, asymptotics.
std::vector<std::string> verify_suite_names();

SuiteReport run_verify_suite(const std::string& name, ReinekeEngine& engine);

/// Runs the named suites ("all" expands to every computational suite) and
/// appends a final "structure" sweep over every moduli the engine computed:
/// nonnegative integer coefficients, constant term 1, palindromic
/// coefficients, degree = 1 - <d,d>.
std::vector<SuiteReport> run_verify(const std::vector<std::string>& names, ReinekeEngine& engine);

}  // namespace quivmod
