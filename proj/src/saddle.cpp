#include "sqs/saddle.hpp"

#include <stdexcept>

namespace sqs::saddle {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

/// Partial sums of the three series sharing the terms
/// t_n = e^{-2 pi y (n^2 - a)}:
///   p0 = sum t_n,   p1 = sum (n^2 - a) t_n,   p2 = sum (n^2 - a)^2 t_n,
/// summed over n in Z (n and -n coincide, so n = 0 once plus doubled
/// positive terms).  Then g = p0, g' (d/dy sense) = -2 pi p1 and
/// g'' = -4 pi^2 p2.
struct SeriesSums {
  BigFloat p0, p1, p2;
  BigFloat tail;  // absolute bound on the omitted (n^2-a)^2-weighted tail
};

SeriesSums g_sums(std::int64_t a, const BigFloat& y, mpfr_prec_t wp) {
  if (y.sign() <= 0) throw std::invalid_argument("g series: y must be > 0");

  const BigFloat t = 2 * BigFloat::pi(wp) * y.round_to(wp);  // 2 pi y
  const BigFloat q = exp(-t);                                // e^{-2 pi y} < 1
  const BigFloat q2 = q * q;
  const BigFloat head = exp(t * a);  // e^{2 pi y a}, the n = 0 radial factor

  // n = 0 term: weight (0 - a).
  BigFloat p0 = head;
  BigFloat p1 = head * (-a);
  BigFloat p2 = head * a * a;

  // term(n) = head * q^{n^2}; the ladder s = q^{2n+1} advances q^{n^2}
  // one step per iteration.
  BigFloat r(1.0, wp);
  BigFloat s = q;
  BigFloat tail(wp);

  for (std::int64_t n = 1;; ++n) {
    r *= s;  // q^{n^2}
    s *= q2;
    const std::int64_t e = n * n - a;
    const BigFloat term = head * r;
    const BigFloat we = term * e;
    p0 += 2 * term;
    p1 += 2 * we;
    p2 += 2 * we * e;

    if (e < a + 1) continue;

    // Tail rule: successive radial factors shrink by rho = q^{2n+1} (which
    // is s at this point); requiring rho * ((n+1)^2-a)^2 <= (n^2-a)^2 / 2
    // makes even the (n^2-a)^2-weighted terms at least halve from here on,
    // so the whole omitted tail is at most twice its first term.
    const std::int64_t e_next = (n + 1) * (n + 1) - a;
    const BigFloat wnext = s * e_next * e_next;
    if (2 * wnext > BigFloat(static_cast<long>(e), wp) * e) continue;
    const BigFloat first_omitted = 2 * head * (r * s) * e_next * e_next;
    tail = 2 * first_omitted;
    if (tail < ldexp2(p0, -static_cast<long>(wp))) break;
  }
  return {p0, p1, p2, tail};
}

BigFloat g1_from_sums(const SeriesSums& sums, mpfr_prec_t wp) {
  return -2 * BigFloat::pi(wp) * sums.p1;
}

BigFloat g2_from_sums(const SeriesSums& sums, mpfr_prec_t wp) {
  const BigFloat pi = BigFloat::pi(wp);
  return -4 * pi * pi * sums.p2;
}

}  // namespace

BigFloat eval_g(std::int64_t a, const BigFloat& y) {
  const mpfr_prec_t wp = y.prec() + kGuardBits;
  return g_sums(a, y, wp).p0.round_to(y.prec());
}

BigFloat eval_g1(std::int64_t a, const BigFloat& y) {
  const mpfr_prec_t wp = y.prec() + kGuardBits;
  return g1_from_sums(g_sums(a, y, wp), wp).round_to(y.prec());
}

BigFloat eval_g2(std::int64_t a, const BigFloat& y) {
  const mpfr_prec_t wp = y.prec() + kGuardBits;
  return g2_from_sums(g_sums(a, y, wp), wp).round_to(y.prec());
}

BigFloat solve_saddle(std::int64_t a, mpfr_prec_t precision_bits) {
  if (a < 1) throw std::invalid_argument("solve_saddle: a must be >= 1");
  const mpfr_prec_t wp = std::max(precision_bits, BigFloat::kMinPrec) + kGuardBits;

  // Sign of g'(iy) without the -2 pi factor: g1 < 0 iff p1 > 0.
  auto g1 = [&](const BigFloat& y) { return g1_from_sums(g_sums(a, y, wp), wp); };

  BigFloat lo(wp), hi(wp);
  if (a == 1) {
    // Seed bracket: the a = 1 saddle sits between 1/(8 pi) and 1.
    lo = BigFloat(1.0, wp) / (8 * BigFloat::pi(wp));
    hi = BigFloat(1.0, wp);
  } else {
    lo = BigFloat(1.0, wp);
    hi = BigFloat(1.0, wp);
    int steps = 0;
    while (g1(lo).sign() >= 0) {
      lo = lo / 2;
      if (++steps > 30) throw std::runtime_error("solve_saddle: no lower bracket above 2^-30");
    }
    steps = 0;
    while (g1(hi).sign() <= 0) {
      hi = hi * 2;
      if (++steps > 30) throw std::runtime_error("solve_saddle: no upper bracket below 2^30");
    }
  }
  if (g1(lo).sign() >= 0 || g1(hi).sign() <= 0)
    throw std::runtime_error("solve_saddle: bracket does not straddle the root");

  // Bisection down to ~12 correct bits.
  for (int i = 0; i < 200; ++i) {
    const BigFloat mid = (lo + hi) / 2;
    if (hi - lo < ldexp2(mid, -14)) break;
    if (g1(mid).sign() < 0)
      lo = mid;
    else
      hi = mid;
  }

  // Newton with the strictly positive derivative 4 pi^2 p2; any step that
  // escapes the bracket falls back to bisection.
  BigFloat y = (lo + hi) / 2;
  const BigFloat pi = BigFloat::pi(wp);
  for (int i = 0; i < 400; ++i) {
    const SeriesSums sums = g_sums(a, y, wp);
    const BigFloat fy = g1_from_sums(sums, wp);
    if (fy.is_zero()) break;
    if (fy.sign() < 0)
      lo = y;
    else
      hi = y;
    const BigFloat deriv = 4 * pi * pi * sums.p2;
    const BigFloat step = fy / deriv;
    BigFloat next = y - step;
    if (next <= lo || next >= hi) next = (lo + hi) / 2;
    const BigFloat delta = abs(next - y);
    y = next;
    if (delta <= ldexp2(abs(y), -static_cast<long>(wp - 4))) break;
  }
  return y.round_to(precision_bits);
}

SaddleData constants(std::int64_t a, std::int64_t b, mpfr_prec_t precision_bits) {
  const mpfr_prec_t prec = std::max(precision_bits, BigFloat::kMinPrec);
  const mpfr_prec_t wp = prec + kGuardBits;

  const BigFloat y = solve_saddle(a, wp);
  const SeriesSums sums = g_sums(a, y, wp + kGuardBits);
  const BigFloat A = sums.p0;
  const BigFloat g2 = g2_from_sums(sums, wp);
  const BigFloat pi = BigFloat::pi(wp);
  const BigFloat B = exp(2 * pi * y * b) * sqrt(2 * pi * A / (-g2));

  SaddleData sd;
  sd.a = a;
  sd.b = b;
  sd.y = y.round_to(prec);
  sd.A = A.round_to(prec);
  sd.g2 = g2.round_to(prec);
  sd.B = B.round_to(prec);
  sd.tail_bound = sums.tail.round_to(prec);
  return sd;
}

}  // namespace sqs::saddle
