#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gpssvs {

struct VerifyOptions {
  /// Thresholds are max(check default, tol); series are built at
  /// (0.1 * max(1e-8, tol))^2 so truncation never dominates a residual.
  double tol = 1e-12;
  std::size_t oracle_dim = 80;
  std::size_t nmax = 100000;
};

struct CheckResult {
  std::string name;
  std::string domain;
  double residual = 0.0;
  double tolerance = 0.0;
  /// "<=" for residual bounds, "<" for strict sign checks.
  std::string relation = "<=";
  bool pass = false;
  /// Failure class and message when the check could not be evaluated.
  std::string error;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

void write_verification_json(std::ostream& out, const VerifyOptions& opts,
                             const std::vector<CheckResult>& checks);

}  // namespace gpssvs
