#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sqs::qseries {

/// Truncated power series in q with exact integer coefficients.
/// coeffs[i] holds the coefficient of q^i; the truncation degree is
/// coeffs.size() - 1 and the vector is never empty.
struct BigCoeffSeries {
  std::vector<mpz_class> coeffs;

  BigCoeffSeries() : coeffs(1) {}
  explicit BigCoeffSeries(std::int64_t trunc_degree)
      : coeffs(static_cast<std::size_t>(trunc_degree) + 1) {}

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

  bool operator==(const BigCoeffSeries&) const = default;
};

/// Which convolution kernel to run.  Serial is the reference
/// implementation; Parallel splits output coefficients across OpenMP
/// threads.  Both produce identical coefficients (integer arithmetic is
/// exact, so summation order does not matter).
enum class Kernel { Serial, Parallel };

/// theta truncated at degree M: coefficient 1 at q^0 and 2 at every
/// perfect-square exponent.
BigCoeffSeries theta_series(std::int64_t M);

/// Cauchy product of s1 and s2 truncated at degree M.  Coefficients of
/// either input above its own truncation degree are treated as zero.
BigCoeffSeries mul_truncated(const BigCoeffSeries& s1, const BigCoeffSeries& s2,
                             std::int64_t M);

/// Serial reference kernel for mul_truncated.
BigCoeffSeries mul_truncated_serial(const BigCoeffSeries& s1, const BigCoeffSeries& s2,
                                    std::int64_t M);

/// s^k truncated at degree M, by binary exponentiation with truncation
/// after every multiply.
BigCoeffSeries pow_truncated(const BigCoeffSeries& s, std::int64_t k, std::int64_t M,
                             Kernel kernel = Kernel::Parallel);

/// Number of ways to write m as an ordered sum of k signed squares: the
/// coefficient of q^m in theta^k.  Zero for m < 0, one for m = 0.
mpz_class r_k(std::int64_t k, std::int64_t m, Kernel kernel = Kernel::Parallel);

}  // namespace sqs::qseries
