#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcert/numerics.hpp"
#include "oracles.hpp"

using namespace lcert;

namespace {

// raw-value distance |x.value - y| < 2^e (ignores x's own interval)
bool close_to(const Real& x, const mpfr_t y, long e) {
  mpfr_t d;
  mpfr_init2(d, std::max(x.precision(), mpfr_get_prec(y)) + 32);
  mpfr_sub(d, x.raw(), y, MPFR_RNDN);
  bool ok = mpfr_zero_p(d) || mpfr_get_exp(d) <= e;
  mpfr_clear(d);
  return ok;
}

bool dist_below(const Real& x, const Real& y, long e) {
  return close_to(x, y.raw(), e);
}

}  // namespace

TEST_CASE("pi agrees with two independent oracles") {
  PrecisionContext ctx(256);
  Real p = pi(ctx);
  mpfr_t m, a;
  mpfr_init2(m, 320);
  mpfr_init2(a, 320);
  oracle::machin_pi(m, 320);
  oracle::agm_pi(a, 320);
  CHECK(close_to(p, m, p.err_exp() + 1));
  CHECK(close_to(p, a, p.err_exp() + 1));
  // the two oracles agree with each other too
  mpfr_sub(m, m, a, MPFR_RNDN);
  CHECK((mpfr_zero_p(m) || mpfr_get_exp(m) < -300));
  mpfr_clears(m, a, (mpfr_ptr)nullptr);
}

TEST_CASE("pi precision monotonicity") {
  Real p64 = pi(PrecisionContext(64));
  Real p256 = pi(PrecisionContext(256));
  CHECK((p64 - p256).abs_below_pow2(8 - 64 + 2 + 2));
  CHECK(p64.err_exp() <= 2 + 8 - 64);  // relative bound 2^(8-bits)
}

TEST_CASE("log_real basics") {
  PrecisionContext ctx(256);
  Real one = Real::of_long(1, ctx.bits);
  Real l1 = log_real(one, ctx);
  CHECK(l1.abs_below_pow2(-250));

  Real l2 = log_real(Real::of_long(2, ctx.bits), ctx);
  Real l3 = log_real(Real::of_long(3, ctx.bits), ctx);
  Real l6 = log_real(Real::of_long(6, ctx.bits), ctx);
  CHECK((l2 + l3 - l6).abs_below_pow2(-248));

  // log((1+sqrt5)/2) = 0.4812118250596034...
  Real five = Real::of_long(5, ctx.bits);
  Real sqrt5(ctx.bits + 32);
  mpfr_sqrt(sqrt5.raw_mut(), five.raw(), MPFR_RNDN);
  sqrt5.set_err_exp(sqrt5.mag_exp() - ctx.bits - 30);
  Real phi = (Real::of_long(1, ctx.bits) + sqrt5) / Real::of_long(2, ctx.bits);
  Real lphi = log_real(phi, ctx);
  Real ref = Real::of_decimal("0.48121182505960344749775891342437",
                              -100, ctx.bits);
  CHECK(dist_below(lphi, ref, -99));

  CHECK_THROWS_AS(log_real(Real::of_long(-1, ctx.bits), ctx), error);
}

TEST_CASE("digamma matches MPFR oracle for random rationals") {
  PrecisionContext ctx(192);
  std::mt19937 rng(12345);
  for (int i = 0; i < 50; ++i) {
    long q = 2 + static_cast<long>(rng() % 97);
    long a = 1 + static_cast<long>(rng() % q);
    Real psi = digamma_rational(a, q, ctx);
    mpfr_t ref;
    mpfr_init2(ref, 256);
    oracle::mpfr_psi(ref, a, q, 256);
    CHECK(close_to(psi, ref, psi.err_exp() + 1));
    mpfr_clear(ref);
  }
}

TEST_CASE("digamma special values") {
  PrecisionContext ctx(256);
  // psi(1) = -gamma
  Real p1 = digamma_rational(1, 1, ctx);
  Real gamma_ref = Real::of_decimal(
      "0.57721566490153286060651209008240243104215933593992", -160, ctx.bits);
  CHECK(dist_below(p1, -gamma_ref, -158));

  // psi(1/2) = -gamma - 2 log 2
  Real ph = digamma_rational(1, 2, ctx);
  Real l2 = log_real(Real::of_long(2, ctx.bits), ctx);
  CHECK((ph - (p1 - l2 - l2)).abs_below_pow2(-240));
}

TEST_CASE("digamma recurrence psi(x+1) - psi(x) = 1/x at x=3/7") {
  PrecisionContext ctx(256);
  Real a = digamma_rational(3, 7, ctx);
  Real b = digamma_rational(10, 7, ctx);
  Real inv = Real::of_mpq(mpq_class(7, 3), ctx.bits);
  CHECK((b - a - inv).abs_below_pow2(-240));
}

TEST_CASE("digamma recurrence holds for all 1 <= a < q <= 50") {
  PrecisionContext ctx(128);
  for (long q = 2; q <= 50; ++q)
    for (long a = 1; a < q; ++a) {
      Real lo = digamma_rational(a, q, ctx);
      Real hi = digamma_rational(a + q, q, ctx);
      Real inv = Real::of_mpq(mpq_class(q, a), ctx.bits);
      CHECK((hi - lo - inv).abs_below_pow2(-110));
    }
}

TEST_CASE("cot_pi values and antisymmetry") {
  PrecisionContext ctx(256);
  Real c4 = cot_pi(1, 4, ctx);
  CHECK((c4 - Real::of_long(1, ctx.bits)).abs_below_pow2(-250));

  Real c6 = cot_pi(1, 6, ctx);
  Real sq = c6 * c6;
  CHECK((sq - Real::of_long(3, ctx.bits)).abs_below_pow2(-245));

  for (long q = 3; q <= 50; ++q)
    for (long a = 1; a < q; ++a) {
      if (2 * a == q) continue;
      Real x = cot_pi(a, q, ctx);
      Real y = cot_pi(q - a, q, ctx);
      CHECK((x + y).abs_below_pow2(-240));
    }

  CHECK_THROWS_AS(cot_pi(4, 4, ctx), error);
  CHECK_THROWS_AS(cot_pi(0, 7, ctx), error);
}

TEST_CASE("cot_derivative against spec cases") {
  PrecisionContext ctx(256);
  // k=1 is plain cot
  Real d1 = cot_derivative(1, 1, 5, ctx);
  Real c = cot_pi(1, 5, ctx);
  CHECK((d1 - c).abs_below_pow2(-240));

  // k=2 at 1/4: -pi (1 + cot^2) = -2 pi
  Real d2 = cot_derivative(2, 1, 4, ctx);
  Real p = pi(ctx);
  CHECK((d2 + p + p).abs_below_pow2(-240));

  // k=3 at 1/4: pi^2 * 2 t (1 + t^2) with t=1 -> 4 pi^2
  Real d3 = cot_derivative(3, 1, 4, ctx);
  Real ref = p * p * Real::of_long(4, ctx.bits);
  CHECK((d3 - ref).abs_below_pow2(-238));
}

TEST_CASE("cot_derivative k=3 vs finite differences on cot_pi") {
  // central second difference of cot(pi z) at z = 1/4 with h = 1/(4*2^30):
  // denominators stay rational so cot_pi applies directly.
  PrecisionContext hi(512);
  long q = 1L << 32;  // h = 2^-32, z = 2^30/2^32 = 1/4
  long a = q / 4;
  long h_inv = q;
  Real f0 = cot_pi(a, q, hi);
  Real fp = cot_pi(a + 1, q, hi);
  Real fm = cot_pi(a - 1, q, hi);
  Real second = (fp - f0 - f0 + fm).mul_pow2(64);  // / h^2, h = 1/h_inv
  (void)h_inv;
  Real d3 = cot_derivative(3, 1, 4, PrecisionContext(256));
  // finite difference error ~ h^2 * f'''' ~ 2^-60
  Real diff = second - d3;
  CHECK(diff.abs().to_double() < 1e-13);
}

TEST_CASE("cot polynomial structure") {
  for (long k = 0; k <= 12; ++k) {
    auto p = cot_poly(k);
    CHECK(p.size() == static_cast<size_t>(k) + 2);  // degree k+1
    CHECK(p.back() != 0);
    // parity: P_k(-t) = (-1)^(k+1) P_k(t)
    for (size_t i = 0; i < p.size(); ++i) {
      bool coef_zero = (p[i] == 0);
      bool parity_ok = ((i % 2) == ((k + 1) % 2));
      CHECK((coef_zero || parity_ok));
    }
  }
}

TEST_CASE("error soundness: coarse vs fine evaluation stays within err") {
  std::mt19937 rng(777);
  for (int i = 0; i < 1000; ++i) {
    long q = 2 + static_cast<long>(rng() % 60);
    long a = 1 + static_cast<long>(rng() % (q - 1));
    PrecisionContext lo(64), hi(128);
    Real x = digamma_rational(a, q, lo);
    Real y = digamma_rational(a, q, hi);
    CHECK((x - y).abs_below_pow2(x.err_exp() + 2));
  }
}

TEST_CASE("interval arithmetic propagates errors soundly") {
  PrecisionContext ctx(128);
  Real a = Real::of_mpq(mpq_class(1, 3), ctx.bits);
  Real b = Real::of_mpq(mpq_class(1, 7), ctx.bits);
  Real s = a + b;  // 10/21
  Real exact = Real::of_mpq(mpq_class(10, 21), 256);
  CHECK(dist_below(s, exact, s.err_exp()));

  Real prod = a * b;
  Real pe = Real::of_mpq(mpq_class(1, 21), 256);
  CHECK(dist_below(prod, pe, prod.err_exp()));

  Real quot = a / b;  // 7/3
  Real qe = Real::of_mpq(mpq_class(7, 3), 256);
  CHECK(dist_below(quot, qe, quot.err_exp()));

  CHECK_THROWS_AS(a / (b - b), error);
}

TEST_CASE("complex arithmetic and abs") {
  PrecisionContext ctx(128);
  Complex z(Real::of_long(3, ctx.bits), Real::of_long(4, ctx.bits));
  Real az = z.abs_value();
  CHECK((az - Real::of_long(5, ctx.bits)).abs_below_pow2(-120));

  Complex w(Real::of_long(1, ctx.bits), Real::of_long(-1, ctx.bits));
  Complex quot = z / w;
  // (3+4i)/(1-i) = (-1 + 7i)/2
  CHECK((quot.re + Real::of_mpq(mpq_class(1, 2), ctx.bits)).abs_below_pow2(-120));
  CHECK((quot.im - Real::of_mpq(mpq_class(7, 2), ctx.bits)).abs_below_pow2(-120));
}

TEST_CASE("decimal round trip") {
  PrecisionContext ctx(128);
  Real x = digamma_rational(1, 3, ctx);
  std::string s = x.to_decimal();
  Real back = Real::of_decimal(s, x.err_exp(), ctx.bits);
  CHECK(dist_below(x, back, x.err_exp() + 2));
}
