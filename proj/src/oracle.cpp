#include "sqs/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace sqs::oracle {

namespace {

mpz_class count_rec(std::int64_t k, std::int64_t m,
                    std::vector<std::vector<mpz_class>>& memo,
                    std::vector<std::vector<bool>>& seen) {
  if (k == 0) return m == 0 ? 1 : 0;
  auto& cached = memo[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  if (seen[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]) return cached;
  mpz_class total = 0;
  for (std::int64_t j = 0; j * j <= m; ++j) {
    total += (j == 0 ? 1 : 2) * count_rec(k - 1, m - j * j, memo, seen);
  }
  seen[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = true;
  cached = total;
  return cached;
}

}  // namespace

mpz_class brute_force_rk(std::int64_t k, std::int64_t m) {
  if (k < 0) throw std::invalid_argument("brute_force_rk: k must be >= 0");
  if (m < 0) throw std::invalid_argument("brute_force_rk: m must be >= 0");
  std::vector<std::vector<mpz_class>> memo(
      static_cast<std::size_t>(k) + 1,
      std::vector<mpz_class>(static_cast<std::size_t>(m) + 1));
  std::vector<std::vector<bool>> seen(
      static_cast<std::size_t>(k) + 1,
      std::vector<bool>(static_cast<std::size_t>(m) + 1, false));
  return count_rec(k, m, memo, seen);
}

mpz_class jacobi_r4(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("jacobi_r4: m must be >= 1");
  mpz_class sum = 0;
  const bool odd_only = (m % 2 == 0);
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    const std::int64_t e = m / d;
    if (!odd_only || d % 2 == 1) sum += d;
    if (e != d && (!odd_only || e % 2 == 1)) sum += e;
  }
  return (odd_only ? 24 : 8) * sum;
}

}  // namespace sqs::oracle
