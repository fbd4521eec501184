#include "sqs/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqs::qseries {

BigCoeffSeries theta_series(std::int64_t M) {
  if (M < 0) throw std::invalid_argument("theta_series: M must be >= 0");
  BigCoeffSeries s(M);
  s.coeffs[0] = 1;
  for (std::int64_t j = 1; j * j <= M; ++j) s.coeffs[static_cast<std::size_t>(j * j)] = 2;
  return s;
}

BigCoeffSeries mul_truncated_serial(const BigCoeffSeries& s1, const BigCoeffSeries& s2,
                                    std::int64_t M) {
  if (M < 0) throw std::invalid_argument("mul_truncated: M must be >= 0");
  BigCoeffSeries out(M);
  const std::int64_t d1 = std::min(s1.degree(), M);
  for (std::int64_t i = 0; i <= d1; ++i) {
    const mpz_class& a = s1.coeffs[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const std::int64_t d2 = std::min(s2.degree(), M - i);
    for (std::int64_t j = 0; j <= d2; ++j) {
      const mpz_class& b = s2.coeffs[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      mpz_addmul(out.coeffs[static_cast<std::size_t>(i + j)].get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
    }
  }
  return out;
}

BigCoeffSeries mul_truncated(const BigCoeffSeries& s1, const BigCoeffSeries& s2,
                             std::int64_t M) {
  if (M < 0) throw std::invalid_argument("mul_truncated: M must be >= 0");
  BigCoeffSeries out(M);
  const std::int64_t d1 = s1.degree();
  const std::int64_t d2 = s2.degree();
  // Each output coefficient is an independent dot product, so threads
  // never touch the same mpz and the result does not depend on the
  // schedule.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t o = 0; o <= M; ++o) {
    mpz_ptr acc = out.coeffs[static_cast<std::size_t>(o)].get_mpz_t();
    const std::int64_t lo = std::max<std::int64_t>(0, o - d2);
    const std::int64_t hi = std::min(d1, o);
    for (std::int64_t i = lo; i <= hi; ++i) {
      const mpz_class& a = s1.coeffs[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      const mpz_class& b = s2.coeffs[static_cast<std::size_t>(o - i)];
      if (b == 0) continue;
      mpz_addmul(acc, a.get_mpz_t(), b.get_mpz_t());
    }
  }
  return out;
}

BigCoeffSeries pow_truncated(const BigCoeffSeries& s, std::int64_t k, std::int64_t M,
                             Kernel kernel) {
  if (k < 0) throw std::invalid_argument("pow_truncated: k must be >= 0");
  if (M < 0) throw std::invalid_argument("pow_truncated: M must be >= 0");
  auto mul = (kernel == Kernel::Serial) ? mul_truncated_serial : mul_truncated;

  BigCoeffSeries result(M);
  result.coeffs[0] = 1;
  if (k == 0) return result;

  BigCoeffSeries base = s;
  std::int64_t e = k;
  while (true) {
    if (e & 1) result = mul(result, base, M);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base, M);
  }
  return result;
}

mpz_class r_k(std::int64_t k, std::int64_t m, Kernel kernel) {
  if (k < 0) throw std::invalid_argument("r_k: k must be >= 0");
  if (m < 0) return 0;
  if (m == 0) return 1;
  const BigCoeffSeries p = pow_truncated(theta_series(m), k, m, kernel);
  return p.coeffs[static_cast<std::size_t>(m)];
}

}  // namespace sqs::qseries
