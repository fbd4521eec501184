#include <doctest.h>

#include <cstdint>

#include "sqs/oracle.hpp"

using namespace sqs::oracle;

namespace {

// Recursion over the *first* coordinate with the largest square first;
// same counts, different evaluation order.
mpz_class count_first_coordinate(std::int64_t k, std::int64_t m) {
  if (k == 0) return m == 0 ? 1 : 0;
  std::int64_t jmax = 0;
  while ((jmax + 1) * (jmax + 1) <= m) ++jmax;
  mpz_class total = 0;
  for (std::int64_t j = jmax; j >= 0; --j)
    total += (j == 0 ? 1 : 2) * count_first_coordinate(k - 1, m - j * j);
  return total;
}

// Raw enumeration over all of [-sqrt(m), sqrt(m)]^k; only viable for k <= 3.
mpz_class raw_enumeration_r3(std::int64_t m) {
  std::int64_t bound = 0;
  while (bound * bound <= m) ++bound;
  mpz_class total = 0;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z)
        if (x * x + y * y + z * z == m) ++total;
  return total;
}

}  // namespace

TEST_CASE("brute force examples") {
  CHECK(brute_force_rk(1, 9) == 2);
  CHECK(brute_force_rk(2, 2) == 4);
  CHECK(brute_force_rk(3, 5) == 24);
  CHECK(brute_force_rk(0, 0) == 1);
  CHECK(brute_force_rk(0, 5) == 0);
  CHECK_THROWS_AS(brute_force_rk(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_rk(2, -1), std::invalid_argument);
}

TEST_CASE("jacobi_r4 examples") {
  CHECK(jacobi_r4(1) == 8);
  CHECK(jacobi_r4(2) == 24);
  CHECK(jacobi_r4(12) == 96);
  CHECK_THROWS_AS(jacobi_r4(0), std::invalid_argument);
}

TEST_CASE("jacobi_r4 equals brute force for m <= 50") {
  for (std::int64_t m = 1; m <= 50; ++m) CHECK(jacobi_r4(m) == brute_force_rk(4, m));
}

TEST_CASE("recursion order does not change the count") {
  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::int64_t m = 0; m <= 25; ++m)
      CHECK(brute_force_rk(k, m) == count_first_coordinate(k, m));
}

TEST_CASE("raw three-dimensional enumeration agrees") {
  for (std::int64_t m = 0; m <= 20; ++m)
    CHECK(brute_force_rk(3, m) == raw_enumeration_r3(m));
}
