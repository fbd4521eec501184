#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sqs/bigfloat.hpp"
#include "sqs/saddle.hpp"

namespace sqs::asymptotic {

/// Number stored as mantissa * 10^exponent10 with mantissa in [1, 10).
/// Zero is represented as {0, 0}.
struct LogScaleValue {
  double mantissa = 0.0;
  long long exponent10 = 0;
};

/// One table row: the exact count, the B*A^n/sqrt(n) estimate and their
/// ratio (exact over estimate, computed from the full-precision integer,
/// not the rendered mantissa).  flagged marks rows whose target exponent
/// an+b was negative.
struct ComparisonRow {
  std::int64_t n = 0;
  LogScaleValue exact;
  LogScaleValue estimate;
  double ratio = 0.0;
  bool flagged = false;
};

/// B * A^n / sqrt(n) evaluated as 10^(log10 B + n log10 A - log10(n)/2);
/// safe from overflow for n up to 1e9.
LogScaleValue estimate(const saddle::SaddleData& sd, std::int64_t n);

/// log10 of the estimate at working precision wp (the full-precision
/// route backing both estimate() and the table's ratio column).
BigFloat estimate_log10(const saddle::SaddleData& sd, std::int64_t n, mpfr_prec_t wp);

/// Mantissa/exponent of a positive integer; mantissa good to well past
/// ten significant digits.  Requires v >= 1.
LogScaleValue exact_to_logscale(const mpz_class& v);

/// Rows (n, exact, estimate, ratio) for the family r_n(an+b) against
/// B*A^n/sqrt(n).  Rows with an+b < 0 report exact = 0, ratio = 0 and are
/// flagged rather than rejected.  Rows are independent and computed in
/// parallel; output order follows ns.
std::vector<ComparisonRow> compare_table(std::int64_t a, std::int64_t b,
                                         const std::vector<std::int64_t>& ns,
                                         mpfr_prec_t precision_bits);

/// Smallest precision (doubling from start) at which every requested
/// estimate's first eight significant digits stop moving.
mpfr_prec_t stable_precision_bits(std::int64_t a, std::int64_t b,
                                  const std::vector<std::int64_t>& ns,
                                  mpfr_prec_t start);

}  // namespace sqs::asymptotic
