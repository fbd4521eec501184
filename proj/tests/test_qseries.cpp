#include <doctest.h>

#include <random>

#include "expected_values.hpp"
#include "sqs/oracle.hpp"
#include "sqs/qseries.hpp"

using namespace sqs::qseries;

namespace {

BigCoeffSeries make_series(const std::vector<long>& v) {
  BigCoeffSeries s(static_cast<std::int64_t>(v.size()) - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s.coeffs[i] = v[i];
  return s;
}

BigCoeffSeries random_series(std::mt19937& rng, std::int64_t max_degree) {
  std::uniform_int_distribution<std::int64_t> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(0, 1'000'000);
  BigCoeffSeries s(deg(rng));
  for (auto& c : s.coeffs) c = coeff(rng);
  return s;
}

}  // namespace

TEST_CASE("theta series coefficients") {
  CHECK(theta_series(0) == make_series({1}));
  CHECK(theta_series(4) == make_series({1, 2, 0, 0, 2}));
  CHECK(theta_series(10) == make_series({1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0}));
  CHECK_THROWS_AS(theta_series(-1), std::invalid_argument);
}

TEST_CASE("truncated multiplication") {
  const auto a = make_series({1, 2});
  CHECK(mul_truncated(a, a, 2) == make_series({1, 4, 4}));
  CHECK(mul_truncated(make_series({1, 0, 3}), make_series({1}), 2) ==
        make_series({1, 0, 3}));
  // two-dimensional lattice counts up to norm 2
  CHECK(mul_truncated(theta_series(2), theta_series(2), 2) == make_series({1, 4, 4}));
  // inputs shorter than M are zero-padded
  CHECK(mul_truncated(make_series({1, 1}), make_series({1, 1}), 5) ==
        make_series({1, 2, 1, 0, 0, 0}));
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 60);
    const auto b = random_series(rng, 60);
    const std::int64_t M = std::uniform_int_distribution<std::int64_t>(0, 80)(rng);
    CHECK(mul_truncated(a, b, M) == mul_truncated_serial(a, b, M));
  }
  const auto theta = theta_series(64);
  CHECK(pow_truncated(theta, 12, 64, Kernel::Parallel) ==
        pow_truncated(theta, 12, 64, Kernel::Serial));
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 30);
    const auto b = random_series(rng, 30);
    const auto c = random_series(rng, 30);
    const std::int64_t M = 40;
    CHECK(mul_truncated(a, b, M) == mul_truncated(b, a, M));
    CHECK(mul_truncated(mul_truncated(a, b, M), c, M) ==
          mul_truncated(a, mul_truncated(b, c, M), M));
  }
}

TEST_CASE("powers of theta") {
  const auto theta = theta_series(12);
  auto p0 = pow_truncated(theta, 0, 12);
  CHECK(p0.coeffs[0] == 1);
  for (std::size_t i = 1; i <= 12; ++i) CHECK(p0.coeffs[i] == 0);
  CHECK(pow_truncated(theta_series(9), 1, 9) == theta_series(9));
  CHECK(pow_truncated(theta_series(1), 4, 1) == make_series({1, 8}));
  CHECK_THROWS_AS(pow_truncated(theta, -2, 12), std::invalid_argument);
}

TEST_CASE("r_k examples") {
  CHECK(r_k(10, 10) == 129064);
  CHECK(r_k(1, 4) == 2);
  CHECK(r_k(3, 5) == 24);
  CHECK(r_k(4, 2) == 24);
  CHECK(r_k(6, 6) == mpz_class(sqs::testdata::kR6_6));
  CHECK(r_k(12, 24) == mpz_class(sqs::testdata::kR12_24));
  CHECK(r_k(5, -3) == 0);
  CHECK(r_k(0, 0) == 1);
  CHECK(r_k(7, 0) == 1);
  CHECK_THROWS_AS(r_k(-1, 5), std::invalid_argument);
}

TEST_CASE("r_100(100) matches the independently computed integer") {
  CHECK(r_k(100, 100) == mpz_class(sqs::testdata::kR100_100));
}

TEST_CASE("r_k(0) = 1 and r_k(1) = 2k") {
  for (std::int64_t k = 1; k <= 20; ++k) {
    const auto p = pow_truncated(theta_series(1), k, 1);
    CHECK(p.coeffs[0] == 1);
    CHECK(p.coeffs[1] == 2 * k);
  }
}

TEST_CASE("theta powers have non-negative coefficients") {
  for (std::int64_t k = 0; k <= 12; ++k) {
    const auto p = pow_truncated(theta_series(40), k, 40);
    for (const auto& c : p.coeffs) CHECK(c >= 0);
  }
}

TEST_CASE("doubling identity r_2k = r_k convolved with itself") {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const auto half = pow_truncated(theta_series(50), k, 50);
    const auto full = pow_truncated(theta_series(50), 2 * k, 50);
    for (std::int64_t m = 0; m <= 50; ++m) {
      mpz_class conv = 0;
      for (std::int64_t j = 0; j <= m; ++j)
        conv += half.coeffs[static_cast<std::size_t>(j)] *
                half.coeffs[static_cast<std::size_t>(m - j)];
      CHECK(full.coeffs[static_cast<std::size_t>(m)] == conv);
    }
  }
}

TEST_CASE("series route matches the recursion oracle") {
  for (std::int64_t k = 0; k <= 5; ++k) {
    const auto p = pow_truncated(theta_series(20), k, 20);
    for (std::int64_t m = 0; m <= 20; ++m)
      CHECK(p.coeffs[static_cast<std::size_t>(m)] == sqs::oracle::brute_force_rk(k, m));
  }
}

TEST_CASE("four-square counts match the divisor-sum formula") {
  const auto p = pow_truncated(theta_series(60), 4, 60);
  for (std::int64_t m = 1; m <= 60; ++m)
    CHECK(p.coeffs[static_cast<std::size_t>(m)] == sqs::oracle::jacobi_r4(m));
}
