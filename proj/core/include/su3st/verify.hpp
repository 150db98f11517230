#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "su3st/residual.hpp"

namespace su3st {

enum class BackendKind { Exact, Float };

inline const char* backend_name(BackendKind b) { return b == BackendKind::Exact ? "exact" : "float"; }

/// Default residual budgets of the float backend; the exact backend demands
/// literal zeros and ignores both.
struct ToleranceConfig {
  double algebraic = 1e-12;  // residuals of purely algebraic identities
  double post_exp = 1e-9;    // residuals downstream of a matrix exponential
};

/// Mutation probe: adds delta to one entry of the extracted f or d tensor
/// before the suites run, to demonstrate the checks are not vacuous.
struct Corruption {
  char tensor = 'f';  // 'f' or 'd'
  int i = 1, j = 2, k = 3;
  double delta = 1e-6;
};

inline constexpr std::uint64_t kDefaultSeed = 20250809;

struct VerifyOptions {
  BackendKind backend = BackendKind::Float;
  std::uint64_t seed = kDefaultSeed;
  ToleranceConfig tol;
  std::optional<Corruption> corrupt;
};

struct CheckResult {
  std::string id;
  std::string relation;  // the identity or property under test, in math form
  BackendKind backend;
  double residual = 0.0;
  bool exact_zero = false;  // meaningful on the exact backend
  double tolerance = 0.0;   // 0 on the exact backend: literal zero required
  bool pass = false;
  std::string note;  // extra observed values, e.g. fitted signs
};

struct SuiteReport {
  std::string suite;
  BackendKind backend;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int fail_count() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
};

/// Suites: "fundamental", "sixrep", "ninerep", "invariants", "exercises",
/// or "all" (their concatenation).
const std::vector<std::string>& suite_names();

/// Runs one suite.  Algebraic checks honor the requested backend; checks
/// that pass through a matrix exponential are inherently floating point and
/// always record backend "float", while coefficient-level conditions that
/// are exact by nature always record "exact".
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace su3st
