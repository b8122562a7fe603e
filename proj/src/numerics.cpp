#include "lcert/numerics.hpp"

#include <algorithm>
#include <mutex>

namespace lcert {

namespace {

mpfr_prec_t op_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

long round_err(const mpfr_t v, mpfr_prec_t p) {
  if (mpfr_zero_p(v)) return Real::kExact;
  return static_cast<long>(mpfr_get_exp(v)) - static_cast<long>(p);
}

long eadd(long mag, long e) {  // exponent of 2^mag * 2^e
  if (mag == Real::kExact || e == Real::kExact) return Real::kExact;
  return mag + e;
}

}  // namespace

Real Real::of_long(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  r.err_ = kExact;
  return r;
}

Real Real::of_mpz(const mpz_class& x, mpfr_prec_t prec) {
  Real r(prec);
  int t = mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
  r.err_ = (t == 0) ? kExact : round_err(r.v_, prec);
  return r;
}

Real Real::of_mpq(const mpq_class& x, mpfr_prec_t prec) {
  Real r(prec);
  int t = mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
  r.err_ = (t == 0) ? kExact : round_err(r.v_, prec);
  return r;
}

Real Real::of_decimal(const std::string& s, long err, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && s != "0")
    fail(errc::corrupt_entry, "bad decimal literal: " + s);
  r.err_ = emax1(err, round_err(r.v_, prec));
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  r.err_ = kExact;
  return r;
}

long Real::ub_exp() const {
  if (value_is_zero()) return err_;
  return emax1(mag_exp(), err_);
}

mpz_class Real::scaled_round(long e) const {
  mpfr_t tmp;
  mpfr_init2(tmp, precision());
  mpfr_mul_2si(tmp, v_, e, MPFR_RNDN);  // exact
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return z;
}

std::string Real::to_decimal(int digits) const {
  if (digits <= 0)
    digits = static_cast<int>(static_cast<double>(precision()) * 0.30103) + 2;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  r.err_ = err_;
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  r.err_ = err_;
  return r;
}

Real Real::mul_pow2(long e) const {
  Real r(precision());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  r.err_ = (err_ == kExact) ? kExact : err_ + e;
  return r;
}

Real operator+(const Real& a, const Real& b) {
  mpfr_prec_t p = op_prec(a, b);
  Real r(p);
  int t = mpfr_add(r.raw_mut(), a.raw(), b.raw(), MPFR_RNDN);
  r.set_err_exp(Real::emax1(Real::emax1(a.err_exp(), b.err_exp()),
                            t == 0 ? Real::kExact : round_err(r.raw(), p)));
  return r;
}

Real operator-(const Real& a, const Real& b) {
  mpfr_prec_t p = op_prec(a, b);
  Real r(p);
  int t = mpfr_sub(r.raw_mut(), a.raw(), b.raw(), MPFR_RNDN);
  r.set_err_exp(Real::emax1(Real::emax1(a.err_exp(), b.err_exp()),
                            t == 0 ? Real::kExact : round_err(r.raw(), p)));
  return r;
}

Real operator*(const Real& a, const Real& b) {
  mpfr_prec_t p = op_prec(a, b);
  Real r(p);
  int t = mpfr_mul(r.raw_mut(), a.raw(), b.raw(), MPFR_RNDN);
  // |x dy| + |y dx| <= 2^(ub(x)+ey) + 2^(ub(y)+ex); ub absorbs the cross term.
  long e1 = eadd(a.ub_exp(), b.err_exp());
  long e2 = eadd(b.ub_exp(), a.err_exp());
  r.set_err_exp(Real::emax1(Real::emax1(e1, e2),
                            t == 0 ? Real::kExact : round_err(r.raw(), p)));
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (!b.definitely_nonzero())
    fail(errc::division_by_zero, "divisor interval contains zero");
  mpfr_prec_t p = op_prec(a, b);
  Real r(p);
  int t = mpfr_div(r.raw_mut(), a.raw(), b.raw(), MPFR_RNDN);
  long mb = b.mag_exp();
  long lb = (b.err_exp() == Real::kExact) ? mb - 1 : mb - 2;  // |b| >= 2^lb
  long e1 = eadd(a.err_exp(), -lb);
  long e2 = eadd(eadd(a.ub_exp(), b.err_exp()), -2 * lb);
  r.set_err_exp(Real::emax1(Real::emax1(e1, e2),
                            t == 0 ? Real::kExact : round_err(r.raw(), p)));
  return r;
}

Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  Complex num = a * b.conj();
  return {num.re / den, num.im / den};
}

Real Complex::abs_value() const {
  mpfr_prec_t p = std::max(re.precision(), im.precision());
  Real r(p);
  mpfr_hypot(r.raw_mut(), re.raw(), im.raw(), MPFR_RNDN);
  // gradient of |z| has norm 1, so d|z| <= |dre| + |dim|
  r.set_err_exp(Real::emax1(Real::emax1(re.err_exp(), im.err_exp()),
                            round_err(r.raw(), p)));
  return r;
}

bool Complex::definitely_nonzero() const {
  return abs_value().definitely_nonzero();
}

// ---------------------------------------------------------------------------

Real pi(const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.bits + 32;
  Real r(wp);
  mpfr_const_pi(r.raw_mut(), MPFR_RNDN);
  r.set_err_exp(r.mag_exp() - ctx.bits + 2);
  return r;
}

Real log_real(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0 || !x.definitely_nonzero())
    fail(errc::non_positive_input, "log of non-positive interval");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(ctx.bits, x.precision()) + 32;
  Real r(wp);
  mpfr_log(r.raw_mut(), x.raw(), MPFR_RNDN);
  long mx = x.mag_exp();
  long lbx = (x.err_exp() == Real::kExact) ? mx - 1 : mx - 2;
  long prop = eadd(x.err_exp(), -lbx);  // d log x = dx / x
  r.set_err_exp(Real::emax1(prop, round_err(r.raw(), wp)));
  return r;
}

const std::vector<mpq_class>& bernoulli_upto(int n) {
  static std::vector<mpq_class> cache{mpq_class(1)};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      s += mpq_class(binom) * cache[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    // binom is now C(m+1, m) = m+1
    mpq_class b = -s / mpq_class(binom);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache;
}

std::vector<mpz_class> cot_poly(long k) {
  static std::vector<std::vector<mpz_class>> cache{{mpz_class(0), mpz_class(1)}};
  static std::mutex mu;
  std::lock_guard lock(mu);
  while (static_cast<long>(cache.size()) <= k) {
    const auto& p = cache.back();
    // P_j = -(1 + t^2) P_{j-1}'
    std::vector<mpz_class> d(p.size() >= 1 ? p.size() - 1 : 0);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = mpz_class(i) * p[i];
    std::vector<mpz_class> nxt(d.size() + 2, mpz_class(0));
    for (size_t i = 0; i < d.size(); ++i) {
      nxt[i] -= d[i];
      nxt[i + 2] -= d[i];
    }
    cache.push_back(std::move(nxt));
  }
  return cache[k];
}

Real digamma_rational(long a, long q, const PrecisionContext& ctx) {
  if (q < 1 || a < 1) fail(errc::out_of_range, "digamma needs a/q > 0");
  mpfr_prec_t wp = ctx.bits + 64;
  long tau = -static_cast<long>(ctx.bits) - 32;  // target |remainder| < 2^tau

  long shift = std::max<long>(64, ctx.bits / 4);
  for (int attempt = 0; attempt < 8; ++attempt, shift *= 2) {
    // psi(x) = psi(x + shift) - sum_{j=0}^{shift-1} 1/(x+j),  x = a/q
    mpfr_t s, t, y, y2, pw, term;
    mpfr_inits2(wp, s, t, y, y2, pw, term, (mpfr_ptr)nullptr);
    mpfr_set_zero(s, 1);
    for (long j = 0; j < shift; ++j) {
      mpq_class r(q, a + j * q);
      r.canonicalize();
      mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDN);
      mpfr_add(s, s, t, MPFR_RNDN);
    }
    mpq_class yq(a + shift * q, q);
    yq.canonicalize();
    mpfr_set_q(y, yq.get_mpq_t(), MPFR_RNDN);

    // asymptotic series: ln y - 1/(2y) - sum B_{2n} / (2n y^{2n})
    mpfr_t acc;
    mpfr_init2(acc, wp);
    mpfr_log(acc, y, MPFR_RNDN);
    mpfr_ui_div(t, 1, y, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpfr_sub(acc, acc, t, MPFR_RNDN);

    mpfr_mul(y2, y, y, MPFR_RNDN);
    mpfr_ui_div(y2, 1, y2, MPFR_RNDN);  // y^-2
    mpfr_set_ui(pw, 1, MPFR_RNDN);

    bool converged = false;
    long prev_mag = std::numeric_limits<long>::max();
    for (int n = 1; n <= 400; ++n) {
      mpfr_mul(pw, pw, y2, MPFR_RNDN);  // y^{-2n}
      const auto& B = bernoulli_upto(2 * n);
      mpq_class coef = B[2 * n] / mpq_class(2 * n);
      coef.canonicalize();
      mpfr_set_q(term, coef.get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, pw, MPFR_RNDN);
      long tm = mpfr_zero_p(term) ? tau - 1 : mpfr_get_exp(term);
      if (tm >= prev_mag) break;  // divergence onset; need larger shift
      prev_mag = tm;
      mpfr_sub(acc, acc, term, MPFR_RNDN);
      if (tm < tau) {
        converged = true;
        break;
      }
    }
    if (converged) {
      mpfr_sub(acc, acc, s, MPFR_RNDN);
      Real r(wp);
      mpfr_set(r.raw_mut(), acc, MPFR_RNDN);
      long mag = r.value_is_zero() ? 0 : r.mag_exp();
      r.set_err_exp(Real::emax1(mag - ctx.bits + 2, tau + 8));
      mpfr_clears(s, t, y, y2, pw, term, acc, (mpfr_ptr)nullptr);
      return r;
    }
    mpfr_clears(s, t, y, y2, pw, term, acc, (mpfr_ptr)nullptr);
  }
  fail(errc::precision_exhausted, "digamma series did not converge");
}

Real cot_pi(long a, long q, const PrecisionContext& ctx) {
  if (q < 1) fail(errc::out_of_range, "cot_pi needs q >= 1");
  long r = a % q;
  if (r < 0) r += q;
  if (r == 0) fail(errc::pole_at_integer, "cot(pi * integer)");
  mpfr_prec_t wp = ctx.bits + 64;
  mpfr_t theta, c;
  mpfr_inits2(wp, theta, c, (mpfr_ptr)nullptr);
  mpfr_const_pi(theta, MPFR_RNDN);
  mpfr_mul_si(theta, theta, r, MPFR_RNDN);
  mpfr_div_si(theta, theta, q, MPFR_RNDN);
  mpfr_cot(c, theta, MPFR_RNDN);
  Real out(wp);
  mpfr_set(out.raw_mut(), c, MPFR_RNDN);
  long mc = out.value_is_zero() ? -static_cast<long>(wp) : out.mag_exp();
  // |d cot| = 1 + cot^2; theta carries relative error 2^(4-wp)
  long prop = 2 * std::max(0L, mc) + 2 + 4 - static_cast<long>(wp);
  out.set_err_exp(Real::emax1(mc - ctx.bits + 2, prop));
  mpfr_clears(theta, c, (mpfr_ptr)nullptr);
  return out;
}

Real cot_derivative(long k, long a, long q, const PrecisionContext& ctx) {
  if (k < 1) fail(errc::out_of_range, "derivative order must be >= 1");
  if (k == 1) return cot_pi(a, q, ctx);
  PrecisionContext inner(ctx.bits + 64);
  Real t = cot_pi(a, q, inner);
  auto coeffs = cot_poly(k - 1);
  Real acc = Real::of_mpz(coeffs.back(), inner.bits);
  for (size_t i = coeffs.size() - 1; i-- > 0;)
    acc = acc * t + Real::of_mpz(coeffs[i], inner.bits);
  Real p = pi(inner);
  Real scale = Real::of_long(1, inner.bits);
  for (long i = 1; i < k; ++i) scale = scale * p;
  return scale * acc;
}

}  // namespace lcert
