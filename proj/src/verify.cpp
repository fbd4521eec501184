#include "sqs/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sqs/bigfloat.hpp"
#include "sqs/oracle.hpp"
#include "sqs/qseries.hpp"
#include "sqs/quadrature.hpp"

namespace sqs::verify {

Report oracle_suite() {
  Report rep;

  for (std::int64_t k = 0; k <= 6; ++k) {
    const auto series = qseries::pow_truncated(qseries::theta_series(30), k, 30);
    int mismatches = 0;
    for (std::int64_t m = 0; m <= 30; ++m) {
      if (series.coeffs[static_cast<std::size_t>(m)] != oracle::brute_force_rk(k, m))
        ++mismatches;
    }
    rep.checks.push_back({"qseries vs brute force, k=" + std::to_string(k) + ", m<=30",
                          mismatches == 0, static_cast<double>(mismatches)});
  }

  {
    const auto series = qseries::pow_truncated(qseries::theta_series(200), 4, 200);
    int mismatches = 0;
    for (std::int64_t m = 1; m <= 200; ++m) {
      if (series.coeffs[static_cast<std::size_t>(m)] != oracle::jacobi_r4(m)) ++mismatches;
    }
    rep.checks.push_back(
        {"qseries vs divisor-sum four-square formula, m<=200", mismatches == 0,
         static_cast<double>(mismatches)});
  }

  return rep;
}

Report quadrature_suite(mpfr_prec_t precision_bits) {
  Report rep;
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, 128);

  {
    const BigFloat y(0.2, prec);
    for (std::int64_t k = 1; k <= 12; ++k) {
      const auto series = qseries::pow_truncated(qseries::theta_series(24), k, 24);
      double worst = 0.0;
      for (std::int64_t m = 0; m <= 24; ++m) {
        const BigFloat numeric = quadrature::extract_coefficient_auto(k, m, y, prec);
        const BigFloat exact(series.coeffs[static_cast<std::size_t>(m)], prec);
        BigFloat yard = abs(exact);
        if (yard < BigFloat(1.0, prec)) yard = BigFloat(1.0, prec);
        worst = std::max(worst, (abs(numeric - exact) / yard).to_double());
      }
      rep.checks.push_back({"quadrature vs exact, k=" + std::to_string(k) + ", m<=24",
                            worst <= 1e-6, worst});
    }
  }

  {
    const BigFloat ys[] = {BigFloat(0.1, prec), BigFloat(0.2, prec), BigFloat(0.4, prec)};
    for (std::int64_t k = 1; k <= 6; ++k) {
      double worst = 0.0;
      for (std::int64_t m = 0; m <= 20; ++m) {
        BigFloat vals[3];
        for (int i = 0; i < 3; ++i)
          vals[i] = quadrature::extract_coefficient_auto(k, m, ys[i], prec);
        BigFloat yard = abs(vals[1]);
        if (yard < BigFloat(1.0, prec)) yard = BigFloat(1.0, prec);
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            worst = std::max(worst, (abs(vals[i] - vals[j]) / yard).to_double());
      }
      rep.checks.push_back({"height independence, k=" + std::to_string(k) + ", m<=20",
                            worst <= 1e-8, worst});
    }
  }

  return rep;
}

}  // namespace sqs::verify
