#include "sqs/format.hpp"

#include <cstdio>
#include <sstream>

namespace sqs::format {

std::string mantissa_str(double mantissa, int sig_digits) {
  if (mantissa == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", sig_digits - 1, mantissa);
  return buf;
}

std::string logscale_str(const asymptotic::LogScaleValue& v, int sig_digits) {
  if (v.mantissa == 0.0) return "0";
  return mantissa_str(v.mantissa, sig_digits) + "e" + std::to_string(v.exponent10);
}

std::string table_csv(const std::vector<asymptotic::ComparisonRow>& rows, int sig_digits) {
  std::ostringstream out;
  out << "n,exact_mantissa,exact_exp10,estimate_mantissa,estimate_exp10,ratio\n";
  for (const auto& r : rows) {
    char ratio[64];
    std::snprintf(ratio, sizeof(ratio), "%.10g", r.ratio);
    out << r.n << ',' << mantissa_str(r.exact.mantissa, sig_digits) << ','
        << r.exact.exponent10 << ',' << mantissa_str(r.estimate.mantissa, sig_digits)
        << ',' << r.estimate.exponent10 << ',' << ratio << '\n';
  }
  return out.str();
}

std::string plot_data_csv(const std::vector<asymptotic::ComparisonRow>& rows) {
  std::ostringstream out;
  out << "n,ratio\n";
  for (const auto& r : rows) {
    char ratio[64];
    std::snprintf(ratio, sizeof(ratio), "%.10g", r.ratio);
    out << r.n << ',' << ratio << '\n';
  }
  return out.str();
}

std::string table_text(const std::vector<asymptotic::ComparisonRow>& rows, int sig_digits) {
  std::ostringstream out;
  for (const auto& r : rows) {
    char ratio[64];
    std::snprintf(ratio, sizeof(ratio), "%.6f", r.ratio);
    out << "n=" << r.n << "  exact=" << logscale_str(r.exact, sig_digits)
        << "  estimate=" << logscale_str(r.estimate, sig_digits) << "  ratio=" << ratio;
    if (r.flagged) out << "  [an+b < 0]";
    out << '\n';
  }
  return out.str();
}

nlohmann::json table_json(std::int64_t a, std::int64_t b,
                          const std::vector<asymptotic::ComparisonRow>& rows,
                          int sig_digits) {
  nlohmann::json doc;
  doc["a"] = a;
  doc["b"] = b;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    doc["rows"].push_back({{"n", r.n},
                           {"exact_mantissa", r.exact.mantissa},
                           {"exact_exp10", r.exact.exponent10},
                           {"estimate_mantissa", r.estimate.mantissa},
                           {"estimate_exp10", r.estimate.exponent10},
                           {"exact", logscale_str(r.exact, sig_digits)},
                           {"estimate", logscale_str(r.estimate, sig_digits)},
                           {"ratio", r.ratio},
                           {"flagged", r.flagged}});
  }
  return doc;
}

nlohmann::json constants_json(const saddle::SaddleData& sd, mpfr_prec_t precision_bits,
                              int digits) {
  return {{"a", sd.a},
          {"b", sd.b},
          {"precision_bits", static_cast<long long>(precision_bits)},
          {"y", sd.y.to_string(digits)},
          {"A", sd.A.to_string(digits)},
          {"B", sd.B.to_string(digits)},
          {"g2", sd.g2.to_string(digits)}};
}

}  // namespace sqs::format
