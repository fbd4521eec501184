#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace sqs {

/// Arbitrary-precision real backed by MPFR.  Every value carries its own
/// precision in bits; binary operations round to the wider of the two
/// operand precisions (round-to-nearest).
class BigFloat {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw std::invalid_argument("BigFloat: unparseable decimal string: " + s);
    }
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  /// Value rounded (once) to a different precision.
  BigFloat round_to(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long long to_ll() const { return static_cast<long long>(mpfr_get_sj(v_, MPFR_RNDN)); }

  /// Decimal rendering with the requested number of significant digits.
  std::string to_string(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // ---- arithmetic ----
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    return binary(a, b, mpfr_add);
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    return binary(a, b, mpfr_sub);
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    return binary(a, b, mpfr_mul);
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    return binary(a, b, mpfr_div);
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long a, const BigFloat& b) { return b * a; }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  // ---- comparisons ----
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  // ---- elementary functions ----
  friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }
  friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
  friend BigFloat exp(const BigFloat& a) { return unary(a, mpfr_exp); }
  friend BigFloat log(const BigFloat& a) { return unary(a, mpfr_log); }
  friend BigFloat log10(const BigFloat& a) { return unary(a, mpfr_log10); }
  friend BigFloat exp10(const BigFloat& a) { return unary(a, mpfr_exp10); }
  friend BigFloat floor(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend BigFloat pow_ui(const BigFloat& a, unsigned long k) {
    BigFloat r(a.prec());
    mpfr_pow_ui(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  /// Computes sin and cos of x in one call, at x's precision.
  friend void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& x) {
    s = BigFloat(x.prec());
    c = BigFloat(x.prec());
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
  }
  /// a * 2^e, exact.
  friend BigFloat ldexp2(const BigFloat& a, long e) {
    BigFloat r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t prec) { return std::max(prec, kMinPrec); }

  using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static BigFloat binary(const BigFloat& a, const BigFloat& b, BinaryFn fn) {
    BigFloat r(std::max(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat unary(const BigFloat& a, UnaryFn fn) {
    BigFloat r(a.prec());
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace sqs
