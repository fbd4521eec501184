#pragma once

#include <string>
#include <vector>

#include <mpfr.h>

namespace sqs::verify {

struct Check {
  std::string name;
  bool pass = false;
  double delta = 0.0;  // worst measured deviation for this check
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Exact-arithmetic cross checks: the series route against the
/// brute-force recursion for k <= 6, m <= 30, and against the
/// divisor-sum four-square formula for m <= 200.  Deltas count
/// mismatching coefficients.
Report oracle_suite();

/// Numeric coefficient extraction against exact values for k <= 12,
/// m <= 24 (1e-6 relative), plus height independence across
/// y in {0.1, 0.2, 0.4} for k <= 6, m <= 20 (1e-8).
Report quadrature_suite(mpfr_prec_t precision_bits = 160);

}  // namespace sqs::verify
