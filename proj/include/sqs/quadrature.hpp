#pragma once

#include <cstdint>

#include "sqs/bigfloat.hpp"

namespace sqs::quadrature {

/// Complex number with both components at the same precision.
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
};

/// theta(z) = 1 + 2 sum of e^{2 pi i n^2 z}, summed until the geometric
/// tail bound drops below 2^-precision_bits.  Requires im(z) > 0.
Complex theta_eval(const Complex& z, mpfr_prec_t precision_bits);

/// Uniform periodic trapezoid approximation (equivalently, a discrete
/// Fourier coefficient) of the q^m coefficient of theta^k:
///   integral over one period of e^{-2 pi i m (x+iy)} theta(x+iy)^k dx.
/// Requires m >= 0, y > 0 and the Nyquist-style margin
/// points >= 2m + 2k.  Nodes are evaluated in parallel and combined with
/// a fixed pairwise reduction, so the result is reproducible.  If im_out
/// is non-null it receives |imaginary part| of the trapezoid sum (a
/// roundoff diagnostic; the coefficient itself is real).
BigFloat extract_coefficient_numeric(std::int64_t k, std::int64_t m, const BigFloat& y,
                                     std::int64_t points, mpfr_prec_t precision_bits,
                                     BigFloat* im_out = nullptr);

/// extract_coefficient_numeric with points starting at 4(m+k) rounded up
/// to a power of two and doubled until two successive results agree to
/// 1e-10 (relative, with an absolute floor of 1).
BigFloat extract_coefficient_auto(std::int64_t k, std::int64_t m, const BigFloat& y,
                                  mpfr_prec_t precision_bits);

/// Ratio of the numerically extracted coefficient r_n(an+b), integrated
/// at the saddle ordinate for a, to the direct evaluation of
/// B*A^n/sqrt(n).  Tends to 1 as n grows.
BigFloat lemma_ratio(std::int64_t a, std::int64_t b, std::int64_t n,
                     mpfr_prec_t precision_bits);

}  // namespace sqs::quadrature
