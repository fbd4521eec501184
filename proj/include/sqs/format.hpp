#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqs/asymptotic.hpp"
#include "sqs/saddle.hpp"

namespace sqs::format {

/// "1.296480" style rendering of a mantissa in [1, 10) with the given
/// number of significant digits (zero renders as "0").
std::string mantissa_str(double mantissa, int sig_digits);

/// "1.296480e5" rendering of a LogScaleValue.
std::string logscale_str(const asymptotic::LogScaleValue& v, int sig_digits);

/// CSV with the fixed header
/// n,exact_mantissa,exact_exp10,estimate_mantissa,estimate_exp10,ratio.
std::string table_csv(const std::vector<asymptotic::ComparisonRow>& rows, int sig_digits);

/// "n,ratio" pairs for external plotting.
std::string plot_data_csv(const std::vector<asymptotic::ComparisonRow>& rows);

/// Aligned human-readable table; flagged rows are annotated.
std::string table_text(const std::vector<asymptotic::ComparisonRow>& rows, int sig_digits);

/// JSON document for a table run.  Mantissas and ratios fit in doubles
/// and stay numeric; anything wider than a double is a decimal string.
nlohmann::json table_json(std::int64_t a, std::int64_t b,
                          const std::vector<asymptotic::ComparisonRow>& rows,
                          int sig_digits);

/// JSON document for solved constants; y, A, B, g2 are decimal strings.
nlohmann::json constants_json(const saddle::SaddleData& sd, mpfr_prec_t precision_bits,
                              int digits);

}  // namespace sqs::format
