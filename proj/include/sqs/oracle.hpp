#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace sqs::oracle {

/// Count of integer tuples (x_1, ..., x_k) with sum of squares m, via the
/// recursion over the last coordinate
///   count(k, m) = sum over j^2 <= m of s(j) * count(k-1, m - j^2),
/// s(0) = 1 and s(j) = 2 otherwise.  Deliberately not a series
/// convolution; used to validate the qseries route.
mpz_class brute_force_rk(std::int64_t k, std::int64_t m);

/// Four-square count from the divisor-sum formula: 8*sigma(m) for odd m,
/// 24 * (sum of odd divisors) for even m.  Requires m >= 1.
mpz_class jacobi_r4(std::int64_t m);

}  // namespace sqs::oracle
