#include "lcert/lvalues.hpp"

#include <numeric>

#include "lcert/errors.hpp"
#include "lcert/nt.hpp"
#include "lcert/units.hpp"

namespace lcert {

const char* lmethod_name(LMethod m) {
  switch (m) {
    case LMethod::series: return "series";
    case LMethod::digamma: return "digamma";
    case LMethod::cotangent: return "cotangent";
    case LMethod::logform: return "logform";
  }
  return "?";
}

LValueRecord l_one_series(const PeriodicFunction& f, long N,
                          const PrecisionContext& ctx) {
  if (!f.period_sum().is_zero())
    fail(errc::nonzero_period_sum, "series diverges for nonzero period sum");
  if (N < 1 || N > 10'000'000) fail(errc::too_large, "N outside (0, 1e7]");
  (void)ctx;  // the series oracle runs at its own fixed low precision

  long q = f.period();
  PrecisionContext low(96);
  std::vector<Complex> z(q);
  for (long a = 1; a <= q; ++a) z[a - 1] = f.value(a).embed(1, low);

  // bound on all partial sums of f (period sum is zero, so one period covers)
  long mexp = -1000;
  {
    Complex p;
    for (long a = 1; a <= q; ++a) {
      p = p + z[a - 1];
      mexp = std::max(mexp, p.abs_value().ub_exp());
    }
  }

  mpfr_t re, im, t;
  mpfr_inits2(96, re, im, t, (mpfr_ptr)nullptr);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (long n = 1; n <= N; ++n) {
    const Complex& c = z[(n - 1) % q];
    if (!mpfr_zero_p(c.re.raw())) {
      mpfr_div_si(t, c.re.raw(), n, MPFR_RNDN);
      mpfr_add(re, re, t, MPFR_RNDN);
    }
    if (!mpfr_zero_p(c.im.raw())) {
      mpfr_div_si(t, c.im.raw(), n, MPFR_RNDN);
      mpfr_add(im, im, t, MPFR_RNDN);
    }
  }

  // Abel tail bound 2M/(N+1) plus summation noise, capped at ~1e-6
  long nbits = 0;
  while ((1L << nbits) <= N) ++nbits;
  long err = std::max(mexp + 2 - nbits, -20L);

  LValueRecord rec;
  rec.method = LMethod::series;
  rec.precision_bits = 96;
  Real vr(96), vi(96);
  mpfr_set(vr.raw_mut(), re, MPFR_RNDN);
  vr.set_err_exp(err);
  mpfr_set(vi.raw_mut(), im, MPFR_RNDN);
  vi.set_err_exp(err);
  rec.value = Complex(std::move(vr), std::move(vi));
  mpfr_clears(re, im, t, (mpfr_ptr)nullptr);
  return rec;
}

LValueRecord l_one_digamma(const PeriodicFunction& f,
                           const PrecisionContext& ctx, bool regularize) {
  const CycloElt& sum = f.period_sum();
  if (!sum.is_zero() && !regularize)
    fail(errc::nonzero_period_sum, "L(1, f) needs a zero period sum");

  long q = f.period();
  Real invq = Real::of_mpq(mpq_class(1, q), ctx.bits);
  Complex acc;
  for (long a = 1; a <= q; ++a) {
    const CycloElt& fa = f.value(a);
    if (fa.is_zero()) continue;
    Complex c = fa.embed(1, ctx);
    Real psi = digamma_rational(a, q, ctx);
    acc = acc + Complex(c.re * psi, c.im * psi);
  }
  Complex value = -(acc * invq);
  if (!sum.is_zero()) {
    // finite part of the Laurent expansion at s = 1
    Complex rho = sum.embed(1, ctx) * invq;
    Real lq = log_real(Real::of_long(q, ctx.bits), ctx);
    value = value - Complex(rho.re * lq, rho.im * lq);
  }

  LValueRecord rec;
  rec.method = LMethod::digamma;
  rec.precision_bits = ctx.bits;
  rec.value = std::move(value);
  return rec;
}

LValueRecord l_one_cot(const DirichletCharacter& chi,
                       const PrecisionContext& ctx) {
  if (!chi.is_odd()) fail(errc::not_odd_character, "cotangent form needs odd chi");
  long q = chi.modulus();
  Complex acc;
  for (long a = 1; 2 * a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    Complex c = chi.value(a).embed(1, ctx);
    Real ct = cot_pi(a, q, ctx);
    acc = acc + Complex(c.re * ct, c.im * ct);
  }
  Real scale = pi(ctx) / Real::of_long(q, ctx.bits);
  LValueRecord rec;
  rec.method = LMethod::cotangent;
  rec.precision_bits = ctx.bits;
  rec.value = Complex(acc.re * scale, acc.im * scale);
  return rec;
}

LogFormResult l_one_logform(const DirichletCharacter& chi,
                            const PrecisionContext& ctx) {
  if (chi.is_odd() || chi.is_trivial() || chi.modulus() <= 4)
    fail(errc::out_of_range, "log form needs even nontrivial chi, q > 4");
  long q = chi.modulus();

  Complex unitsum;
  for (long a : ramachandra_index_set(q)) {
    RamachandraUnit u = xi(q, a);
    Real lg = log_real(u.elt.embed(1, ctx).abs_value(), ctx);
    Complex c = chi.value(a).conj().embed(1, ctx);
    unitsum = unitsum + Complex(c.re * lg, c.im * lg);
  }
  if (!unitsum.definitely_nonzero())
    fail(errc::unit_sum_vanishes,
         "unit log sum not separable from zero (anomaly)");

  LValueRecord base =
      l_one_digamma(PeriodicFunction::from_character(chi), ctx);
  LogFormResult out;
  out.delta = base.value / unitsum;
  out.unitsum = std::move(unitsum);
  out.record.method = LMethod::logform;
  out.record.precision_bits = ctx.bits;
  out.record.value = base.value;
  return out;
}

NonVanishing verify_nonvanishing(const PeriodicFunction& f,
                                 const PrecisionContext& ctx,
                                 bool regularize) {
  LValueRecord rec = l_one_digamma(f, ctx, regularize);
  Real mag = rec.value.abs_value();
  NonVanishing out;
  out.nonzero = mag.definitely_nonzero();
  if (mag.exact())
    out.margin = mag;
  else
    out.margin = mag - Real::pow2(mag.err_exp(), mag.precision());
  return out;
}

bool cross_check(const LValueRecord& a, const LValueRecord& b) {
  Complex d = a.value - b.value;
  return !d.abs_value().definitely_nonzero();
}

}  // namespace lcert
