#pragma once

// Arbitrary-precision reals with one-sided power-of-two error bounds,
// built on MPFR.  A Real models the interval [value - 2^err, value + 2^err];
// every operation keeps that containment sound (conservatively).

#include <gmpxx.h>
#include <mpfr.h>

#include <limits>
#include <string>
#include <vector>

#include "lcert/errors.hpp"

namespace lcert {

struct PrecisionContext {
  mpfr_prec_t bits;

  explicit PrecisionContext(long b) : bits(b) {
    if (b < 64) fail(errc::out_of_range, "precision below 64 bits");
  }
};

class Real {
 public:
  /// Sentinel error exponent meaning "exact" (error = 0).
  static constexpr long kExact = std::numeric_limits<long>::min() / 4;

  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) : err_(o.err_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept : err_(o.err_) {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      err_ = o.err_;
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) {
      mpfr_swap(v_, o.v_);
      err_ = o.err_;
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of_long(long x, mpfr_prec_t prec);
  static Real of_mpz(const mpz_class& x, mpfr_prec_t prec);
  static Real of_mpq(const mpq_class& x, mpfr_prec_t prec);
  /// Parse a decimal string; err is the caller-asserted error exponent.
  static Real of_decimal(const std::string& s, long err, mpfr_prec_t prec);
  /// 2^e, exact.
  static Real pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  long err_exp() const { return err_; }
  void set_err_exp(long e) { err_ = e; }
  bool exact() const { return err_ == kExact; }
  bool value_is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// Exponent e with 2^(e-1) <= |value| < 2^e; kExact if value == 0.
  long mag_exp() const {
    return value_is_zero() ? kExact : static_cast<long>(mpfr_get_exp(v_));
  }
  /// Exponent u with |true quantity| < 2^u.
  long ub_exp() const;
  /// True iff the interval excludes 0.
  bool definitely_nonzero() const {
    return !value_is_zero() && (err_ == kExact || err_ < mag_exp() - 1);
  }
  bool contains_zero() const { return !definitely_nonzero(); }
  /// True iff |true quantity| < 2^e is guaranteed.
  bool abs_below_pow2(long e) const { return ub_exp() <= e; }

  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Round value * 2^e to the nearest integer.
  mpz_class scaled_round(long e) const;
  std::string to_decimal(int digits = 0) const;

  Real operator-() const;
  Real abs() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real mul_pow2(long e) const;  // exact scaling

  /// Combine error exponents of a sum: max + 1.
  static long emax1(long a, long b) {
    if (a == kExact) return b;
    if (b == kExact) return a;
    return (a > b ? a : b) + 1;
  }

  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw_mut() { return v_; }

 private:
  mpfr_t v_;
  long err_ = kExact;
};

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Complex of_real(Real r) { return Complex(std::move(r), Real()); }

  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& b) {
    return {a.re * b, a.im * b};
  }
  friend Complex operator/(const Complex& a, const Complex& b);

  /// |z| with sound error bound.
  Real abs_value() const;
  long ub_exp() const { return Real::emax1(re.ub_exp(), im.ub_exp()); }
  bool definitely_nonzero() const;
};

// ---- Special functions (inputs exact; results carry sound errors) ----

Real pi(const PrecisionContext& ctx);
Real log_real(const Real& x, const PrecisionContext& ctx);
/// psi(a/q), 1 <= a <= q.
Real digamma_rational(long a, long q, const PrecisionContext& ctx);
/// cot(pi a / q); error if a/q is an integer.
Real cot_pi(long a, long q, const PrecisionContext& ctx);
/// (d/dz)^(k-1) cot(pi z) at z = a/q, k >= 1.
Real cot_derivative(long k, long a, long q, const PrecisionContext& ctx);

/// Integer coefficients of P_k with cot^(k)(pi z) = pi^k P_k(cot(pi z)):
/// P_0(t) = t, P_j = -(1 + t^2) P_{j-1}'.  Degree k+1.
std::vector<mpz_class> cot_poly(long k);

/// B_0 .. B_n as exact rationals.
const std::vector<mpq_class>& bernoulli_upto(int n);

}  // namespace lcert
