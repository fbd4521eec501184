#pragma once

#include <cstdint>

#include "sqs/bigfloat.hpp"

namespace sqs::saddle {

/// Solved saddle point and derived constants for a pair (a, b).
/// y is the unique positive ordinate with g'(iy) = 0 where
/// g(z) = q^{-a} theta(z); A = g(iy); g2 = g''(iy) < 0; and
/// B = e^{2 pi y b} sqrt(2 pi A / -g2).
struct SaddleData {
  std::int64_t a = 1;
  std::int64_t b = 0;
  BigFloat y;
  BigFloat A;
  BigFloat g2;
  BigFloat B;
  /// Absolute bound on the truncation error of the series sums behind
  /// y, A and g2 (the heaviest-weighted tail, evaluated at y).
  BigFloat tail_bound;
};

/// g(iy) = sum over n in Z of e^{-2 pi y (n^2 - a)}.  Requires y > 0.
BigFloat eval_g(std::int64_t a, const BigFloat& y);

/// d/dy of g(iy): sum of -2 pi (n^2 - a) e^{-2 pi y (n^2 - a)}.
/// Strictly increasing in y; negative near 0, positive for large y.
BigFloat eval_g1(std::int64_t a, const BigFloat& y);

/// g''(iy) = -4 pi^2 sum of (n^2 - a)^2 e^{-2 pi y (n^2 - a)}; always
/// negative.
BigFloat eval_g2(std::int64_t a, const BigFloat& y);

/// The unique y > 0 with eval_g1(a, y) = 0, by sign-change bracketing,
/// bisection and Newton polishing.  Result carries precision_bits.
BigFloat solve_saddle(std::int64_t a, mpfr_prec_t precision_bits);

/// Solves the saddle point for a and assembles A, g2 and B for (a, b).
SaddleData constants(std::int64_t a, std::int64_t b, mpfr_prec_t precision_bits);

}  // namespace sqs::saddle
