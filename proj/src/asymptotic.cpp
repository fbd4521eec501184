#include "sqs/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

#include "sqs/qseries.hpp"

namespace sqs::asymptotic {

namespace {

/// Splits a base-10 logarithm into a normalized (mantissa, exponent) pair.
LogScaleValue from_log10(const BigFloat& l) {
  LogScaleValue out;
  const BigFloat e = floor(l);
  out.exponent10 = e.to_ll();
  out.mantissa = exp10(l - e).to_double();
  if (out.mantissa >= 10.0) {
    out.mantissa /= 10.0;
    out.exponent10 += 1;
  } else if (out.mantissa < 1.0) {
    out.mantissa *= 10.0;
    out.exponent10 -= 1;
  }
  return out;
}

}  // namespace

BigFloat estimate_log10(const saddle::SaddleData& sd, std::int64_t n, mpfr_prec_t wp) {
  if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");
  const BigFloat A = sd.A.round_to(wp);
  const BigFloat B = sd.B.round_to(wp);
  const BigFloat nf(static_cast<long>(n), wp);
  return log10(B) + static_cast<long>(n) * log10(A) - log10(nf) / 2;
}

LogScaleValue estimate(const saddle::SaddleData& sd, std::int64_t n) {
  return from_log10(estimate_log10(sd, n, sd.A.prec() + 32));
}

LogScaleValue exact_to_logscale(const mpz_class& v) {
  if (v < 1) throw std::invalid_argument("exact_to_logscale: v must be >= 1");
  const BigFloat x(v, 192);
  return from_log10(log10(x));
}

std::vector<ComparisonRow> compare_table(std::int64_t a, std::int64_t b,
                                         const std::vector<std::int64_t>& ns,
                                         mpfr_prec_t precision_bits) {
  if (a < 1) throw std::invalid_argument("compare_table: a must be >= 1");
  if (ns.empty()) throw std::invalid_argument("compare_table: ns must be non-empty");
  for (const std::int64_t n : ns)
    if (n < 1) throw std::invalid_argument("compare_table: each n must be >= 1");
  const saddle::SaddleData sd = saddle::constants(a, b, precision_bits);
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(precision_bits, 192);

  std::vector<ComparisonRow> rows(ns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::int64_t n = ns[i];
    ComparisonRow row;
    row.n = n;
    row.estimate = estimate(sd, n);
    const std::int64_t m = a * n + b;
    if (m < 0) {
      row.flagged = true;  // exact stays 0, ratio stays 0
    } else {
      const mpz_class v = qseries::r_k(n, m);
      if (v > 0) {
        row.exact = exact_to_logscale(v);
        const BigFloat diff = log10(BigFloat(v, wp)) - estimate_log10(sd, n, wp);
        row.ratio = exp10(diff).to_double();
      }
    }
    rows[i] = row;
  }
  return rows;
}

mpfr_prec_t stable_precision_bits(std::int64_t a, std::int64_t b,
                                  const std::vector<std::int64_t>& ns,
                                  mpfr_prec_t start) {
  auto digits8 = [](const LogScaleValue& v) {
    return std::llround(v.mantissa * 1e7);
  };
  mpfr_prec_t prec = std::max(start, BigFloat::kMinPrec);
  constexpr mpfr_prec_t kMaxPrec = 1 << 14;
  while (prec < kMaxPrec) {
    const saddle::SaddleData sd1 = saddle::constants(a, b, prec);
    const saddle::SaddleData sd2 = saddle::constants(a, b, 2 * prec);
    bool stable = true;
    for (const std::int64_t n : ns) {
      const LogScaleValue e1 = estimate(sd1, n);
      const LogScaleValue e2 = estimate(sd2, n);
      if (e1.exponent10 != e2.exponent10 || digits8(e1) != digits8(e2)) {
        stable = false;
        break;
      }
    }
    if (stable) return prec;
    prec *= 2;
  }
  return kMaxPrec;
}

}  // namespace sqs::asymptotic
