#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqs/asymptotic.hpp"
#include "sqs/format.hpp"
#include "sqs/oracle.hpp"
#include "sqs/qseries.hpp"
#include "sqs/quadrature.hpp"
#include "sqs/saddle.hpp"
#include "sqs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct ExactArgs {
  std::int64_t k = 0;
  std::int64_t m = 0;
  bool logscale = false;
  std::string format = "text";
};

struct ConstantsArgs {
  std::int64_t a = 1;
  std::int64_t b = 0;
  long precision_bits = 128;
  int digits = 20;
  std::string format = "text";
};

struct TableArgs {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::vector<std::int64_t> ns;
  long precision_bits = 128;
  int digits = 10;
  std::string format = "csv";
  bool plot_data = false;
};

int run_exact(const ExactArgs& args) {
  const mpz_class v = sqs::qseries::r_k(args.k, args.m);
  sqs::asymptotic::LogScaleValue ls;
  if (v >= 1) ls = sqs::asymptotic::exact_to_logscale(v);
  if (args.format == "json") {
    nlohmann::json doc{{"k", args.k}, {"m", args.m}, {"value", v.get_str()}};
    if (args.logscale) {
      doc["mantissa"] = ls.mantissa;
      doc["exponent10"] = ls.exponent10;
    }
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << v.get_str() << '\n';
    if (args.logscale)
      std::cout << "logscale: " << sqs::format::logscale_str(ls, 10) << '\n';
  }
  return kExitOk;
}

int run_constants(const ConstantsArgs& args, bool y_only) {
  const auto sd = sqs::saddle::constants(args.a, args.b, args.precision_bits);
  if (args.format == "json") {
    nlohmann::json doc = y_only
        ? nlohmann::json{{"a", args.a}, {"y", sd.y.to_string(args.digits)}}
        : sqs::format::constants_json(sd, args.precision_bits, args.digits);
    std::cout << doc.dump() << '\n';
  } else if (y_only) {
    std::cout << sd.y.to_string(args.digits) << '\n';
  } else {
    std::cout << "y = " << sd.y.to_string(args.digits) << '\n'
              << "A = " << sd.A.to_string(args.digits) << '\n'
              << "B = " << sd.B.to_string(args.digits) << '\n';
  }
  return kExitOk;
}

int run_table(const TableArgs& args) {
  const mpfr_prec_t prec =
      sqs::asymptotic::stable_precision_bits(args.a, args.b, args.ns, args.precision_bits);
  const auto rows = sqs::asymptotic::compare_table(args.a, args.b, args.ns, prec);
  if (args.plot_data)
    std::cout << sqs::format::plot_data_csv(rows);
  else if (args.format == "json")
    std::cout << sqs::format::table_json(args.a, args.b, rows, args.digits).dump(2) << '\n';
  else if (args.format == "text")
    std::cout << sqs::format::table_text(rows, args.digits);
  else
    std::cout << sqs::format::table_csv(rows, args.digits);
  return kExitOk;
}

void print_report(const sqs::verify::Report& rep) {
  for (const auto& c : rep.checks)
    std::printf("%-55s %s  (max delta %.3g)\n", c.name.c_str(), c.pass ? "ok" : "FAIL",
                c.delta);
}

int run_verify(const std::string& suite, long precision_bits) {
  bool ok = true;
  if (suite == "oracle" || suite == "all") {
    const auto rep = sqs::verify::oracle_suite();
    print_report(rep);
    ok = ok && rep.all_pass();
  }
  if (suite == "quadrature" || suite == "all") {
    const auto rep = sqs::verify::quadrature_suite(precision_bits);
    print_report(rep);
    ok = ok && rep.all_pass();
  }
  std::printf("%s\n", ok ? "verify: all checks passed" : "verify: FAILURES");
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_oracle_check(std::int64_t k, std::int64_t m, bool have_pair) {
  if (!have_pair) {
    const auto rep = sqs::verify::oracle_suite();
    print_report(rep);
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
  }
  const mpz_class series = sqs::qseries::r_k(k, m);
  const mpz_class brute = sqs::oracle::brute_force_rk(k, m);
  bool ok = series == brute;
  std::printf("qseries r_%lld(%lld)     = %s\n", static_cast<long long>(k),
              static_cast<long long>(m), series.get_str().c_str());
  std::printf("brute force          = %s\n", brute.get_str().c_str());
  if (k == 4 && m >= 1) {
    const mpz_class jac = sqs::oracle::jacobi_r4(m);
    std::printf("divisor-sum formula  = %s\n", jac.get_str().c_str());
    ok = ok && series == jac;
  }
  std::printf("%s\n", ok ? "ok" : "MISMATCH");
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic counting of representations as sums of squares"};
  app.require_subcommand(1);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "Exact r_k(m) as a full-precision integer");
  exact->add_option("--k", exact_args.k, "number of squares")
      ->required()
      ->check(CLI::NonNegativeNumber);
  exact->add_option("--m", exact_args.m, "target value (may be negative)")->required();
  exact->add_flag("--logscale", exact_args.logscale, "also print mantissa/exponent10");
  exact->add_option("--format", exact_args.format)->check(CLI::IsMember({"text", "json"}));

  ConstantsArgs const_args;
  auto* constants = app.add_subcommand("constants", "Saddle constants y, A, B for (a, b)");
  constants->add_option("--a", const_args.a)->required()->check(CLI::PositiveNumber);
  constants->add_option("--b", const_args.b);
  constants->add_option("--precision-bits", const_args.precision_bits)
      ->check(CLI::Range(64L, 65536L));
  constants->add_option("--digits", const_args.digits)->check(CLI::Range(1, 10000));
  constants->add_option("--format", const_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  ConstantsArgs saddle_args;
  auto* saddle_cmd = app.add_subcommand("saddle", "Saddle ordinate y only");
  saddle_cmd->add_option("--a", saddle_args.a)->required()->check(CLI::PositiveNumber);
  saddle_cmd->add_option("--precision-bits", saddle_args.precision_bits)
      ->check(CLI::Range(64L, 65536L));
  saddle_cmd->add_option("--digits", saddle_args.digits)->check(CLI::Range(1, 10000));
  saddle_cmd->add_option("--format", saddle_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Exact vs estimate rows for r_n(an+b)");
  table->add_option("--a", table_args.a)->required()->check(CLI::PositiveNumber);
  table->add_option("--b", table_args.b);
  table->add_option("--n", table_args.ns, "comma-separated list of n")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  table->add_option("--precision-bits", table_args.precision_bits)
      ->check(CLI::Range(64L, 65536L));
  table->add_option("--digits", table_args.digits)->check(CLI::Range(2, 30));
  table->add_option("--format", table_args.format)
      ->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_flag("--plot-data", table_args.plot_data, "emit n,ratio pairs only");

  std::string suite = "all";
  long verify_prec = 160;
  auto* verify = app.add_subcommand("verify", "Run cross-validation suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"oracle", "quadrature", "all"}));
  verify->add_option("--precision-bits", verify_prec)->check(CLI::Range(64L, 65536L));

  std::int64_t oc_k = 0, oc_m = 0;
  auto* oracle_check = app.add_subcommand("oracle-check", "Compare one r_k(m) across routes");
  auto* oc_k_opt = oracle_check->add_option("--k", oc_k)->check(CLI::NonNegativeNumber);
  auto* oc_m_opt = oracle_check->add_option("--m", oc_m)->check(CLI::NonNegativeNumber);
  oc_k_opt->needs(oc_m_opt);
  oc_m_opt->needs(oc_k_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (exact->parsed()) return run_exact(exact_args);
    if (constants->parsed()) return run_constants(const_args, false);
    if (saddle_cmd->parsed()) return run_constants(saddle_args, true);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(suite, verify_prec);
    if (oracle_check->parsed())
      return run_oracle_check(oc_k, oc_m, oc_k_opt->count() > 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
