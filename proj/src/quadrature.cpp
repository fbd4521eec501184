#include "sqs/quadrature.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "sqs/saddle.hpp"

namespace sqs::quadrature {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;

Complex cmul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex cadd(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}

Complex cpow(const Complex& v, std::int64_t k, mpfr_prec_t wp) {
  Complex result(BigFloat(1.0, wp), BigFloat(0.0, wp));
  if (k == 0) return result;
  Complex base = v;
  std::int64_t e = k;
  while (true) {
    if (e & 1) result = cmul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = cmul(base, base);
  }
  return result;
}

/// Radial factors e^{-2 pi y n^2} for n = 1..N, with N chosen so the
/// doubled geometric tail past N is below 2^-wp.
std::vector<BigFloat> radial_factors(const BigFloat& y, mpfr_prec_t wp) {
  const BigFloat t = 2 * BigFloat::pi(wp) * y.round_to(wp);
  const BigFloat q = exp(-t);
  const BigFloat q2 = q * q;
  std::vector<BigFloat> r;
  BigFloat rn(1.0, wp);
  BigFloat s = q;  // q^{2n+1} ladder
  const BigFloat eps = ldexp2(BigFloat(1.0, wp), -static_cast<long>(wp));
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    rn *= s;  // q^{n^2}
    s *= q2;
    r.push_back(rn);
    // tail <= 2 * r_{N+1} / (1 - q^{2N+3}); q^{2N+3} <= 1/2 once past the
    // first few terms, so 4 * r_{N+1} bounds it.
    const BigFloat next = rn * s;
    if (4 * next < eps && 2 * s < BigFloat(1.0, wp)) return r;
  }
  throw std::runtime_error("radial_factors: series did not converge (y too small?)");
}

/// e^{2 pi i t / P} for t in [0, P), computed for the first half and
/// reflected (conjugate symmetry is exact by construction).
std::vector<Complex> twiddle_table(std::int64_t P, mpfr_prec_t wp) {
  std::vector<Complex> tab(static_cast<std::size_t>(P),
                           Complex(BigFloat(wp), BigFloat(wp)));
  const BigFloat two_pi = 2 * BigFloat::pi(wp);
  tab[0] = Complex(BigFloat(1.0, wp), BigFloat(0.0, wp));
  for (std::int64_t t = 1; 2 * t <= P; ++t) {
    BigFloat s(wp), c(wp);
    if (2 * t == P) {
      c = BigFloat(-1.0, wp);
      s = BigFloat(0.0, wp);
    } else {
      const BigFloat ang = two_pi * t / static_cast<long>(P);
      sin_cos(s, c, ang);
    }
    tab[static_cast<std::size_t>(t)] = Complex(c, s);
    tab[static_cast<std::size_t>(P - t)] = Complex(c, -s);
  }
  return tab;
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return cadd(pairwise_sum(v, lo, mid), pairwise_sum(v, mid, hi));
}

std::int64_t next_pow2(std::int64_t v) {
  std::int64_t p = 1;
  while (p < v) p *= 2;
  return p;
}

}  // namespace

Complex theta_eval(const Complex& z, mpfr_prec_t precision_bits) {
  if (z.im.sign() <= 0) throw std::invalid_argument("theta_eval: im(z) must be > 0");
  const mpfr_prec_t prec = std::max(precision_bits, BigFloat::kMinPrec);
  const mpfr_prec_t wp = prec + kGuardBits;

  const BigFloat two_pi = 2 * BigFloat::pi(wp);
  const BigFloat x = z.re.round_to(wp);
  const BigFloat t = two_pi * z.im.round_to(wp);
  const BigFloat q = exp(-t);
  const BigFloat q2 = q * q;

  BigFloat re(1.0, wp), im(0.0, wp);
  BigFloat rn(1.0, wp);
  BigFloat s = q;
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    rn *= s;
    s *= q2;
    BigFloat sn(wp), cn(wp);
    sin_cos(sn, cn, two_pi * (n * n) * x);
    re += 2 * rn * cn;
    im += 2 * rn * sn;

    // |omitted| <= 2 sum of later radial factors <= 4 r_{n+1} once the
    // ladder ratio has dropped below 1/2.
    const BigFloat next = rn * s;
    BigFloat mod(wp);
    mpfr_hypot(mod.raw(), re.raw(), im.raw(), MPFR_RNDN);
    if (4 * next < ldexp2(mod, -static_cast<long>(wp)) && 2 * s < BigFloat(1.0, wp)) break;
  }
  return {re.round_to(prec), im.round_to(prec)};
}

BigFloat extract_coefficient_numeric(std::int64_t k, std::int64_t m, const BigFloat& y,
                                     std::int64_t points, mpfr_prec_t precision_bits,
                                     BigFloat* im_out) {
  if (k < 0) throw std::invalid_argument("extract_coefficient_numeric: k must be >= 0");
  if (m < 0) throw std::invalid_argument("extract_coefficient_numeric: m must be >= 0");
  if (y.sign() <= 0) throw std::invalid_argument("extract_coefficient_numeric: y must be > 0");
  if (points < 1 || points < 2 * m + 2 * k)
    throw std::invalid_argument("extract_coefficient_numeric: points must be >= 2m + 2k");

  const mpfr_prec_t prec = std::max(precision_bits, BigFloat::kMinPrec);
  const mpfr_prec_t wp = prec + kGuardBits;
  const std::int64_t P = points;

  const std::vector<BigFloat> radial = radial_factors(y, wp);
  const std::vector<Complex> tab = twiddle_table(P, wp);
  const auto N = static_cast<std::int64_t>(radial.size());

  // Node x_j = -1/2 + j/P.  Each theta term picks up (-1)^{n^2} from the
  // -1/2 shift and a table twiddle from j/P; likewise q^{-m} contributes
  // (-1)^m and the conjugate twiddle, plus the scalar e^{2 pi m y}.
  std::vector<Complex> node(static_cast<std::size_t>(P),
                            Complex(BigFloat(wp), BigFloat(wp)));
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < P; ++j) {
    Complex th(BigFloat(1.0, wp), BigFloat(0.0, wp));
    for (std::int64_t n = 1; n <= N; ++n) {
      const std::int64_t idx = (n * n % P) * j % P;
      const BigFloat& rn = radial[static_cast<std::size_t>(n - 1)];
      const Complex& w = tab[static_cast<std::size_t>(idx)];
      const long sgn = (n % 2 == 0) ? 2 : -2;
      th.re += sgn * rn * w.re;
      th.im += sgn * rn * w.im;
    }
    Complex v = cpow(th, k, wp);
    const std::int64_t midx = ((m % P) * j) % P;
    const Complex& wm = tab[static_cast<std::size_t>((P - midx) % P)];
    v = cmul(v, wm);
    if (m % 2 != 0) {
      v.re = -v.re;
      v.im = -v.im;
    }
    node[static_cast<std::size_t>(j)] = v;
  }

  const Complex total = pairwise_sum(node, 0, node.size());
  const BigFloat scale = exp(2 * BigFloat::pi(wp) * y.round_to(wp) * m) / static_cast<long>(P);
  if (im_out != nullptr) *im_out = abs(total.im * scale).round_to(prec);
  return (total.re * scale).round_to(prec);
}

BigFloat extract_coefficient_auto(std::int64_t k, std::int64_t m, const BigFloat& y,
                                  mpfr_prec_t precision_bits) {
  std::int64_t P = next_pow2(std::max<std::int64_t>({8, 4 * (m + k), 2 * m + 2 * k}));
  BigFloat prev = extract_coefficient_numeric(k, m, y, P, precision_bits);
  const BigFloat tol("1e-10", 64);
  for (; P <= (std::int64_t{1} << 22); ) {
    P *= 2;
    const BigFloat cur = extract_coefficient_numeric(k, m, y, P, precision_bits);
    BigFloat yard = abs(cur);
    if (yard < BigFloat(1.0, 64)) yard = BigFloat(1.0, 64);
    if (abs(cur - prev) <= tol * yard) return cur;
    prev = cur;
  }
  throw std::runtime_error("extract_coefficient_auto: no convergence in point doubling");
}

BigFloat lemma_ratio(std::int64_t a, std::int64_t b, std::int64_t n,
                     mpfr_prec_t precision_bits) {
  if (n < 1) throw std::invalid_argument("lemma_ratio: n must be >= 1");
  const std::int64_t m = a * n + b;
  if (m < 0) throw std::invalid_argument("lemma_ratio: an+b must be >= 0");

  const mpfr_prec_t prec = std::max(precision_bits, BigFloat::kMinPrec);
  const saddle::SaddleData sd = saddle::constants(a, b, prec + kGuardBits);
  const BigFloat numer = extract_coefficient_auto(n, m, sd.y, prec + kGuardBits);
  // Direct (non-log) evaluation of B A^n / sqrt(n); n here stays well
  // inside MPFR's exponent range.
  const BigFloat denom =
      sd.B * pow_ui(sd.A, static_cast<unsigned long>(n)) /
      sqrt(BigFloat(static_cast<long>(n), prec + kGuardBits));
  return (numer / denom).round_to(prec);
}

}  // namespace sqs::quadrature
