#pragma once

// Test-only oracles, independent of the library's own evaluation paths.

#include <mpfr.h>

#include <string>

namespace oracle {

/// pi via Machin's arctan formula, summed term by term.
inline void machin_pi(mpfr_t out, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  mpfr_t acc, term, tmp;
  mpfr_inits2(wp, acc, term, tmp, (mpfr_ptr)nullptr);

  auto arctan_inv = [&](mpfr_t dst, unsigned long x) {
    // arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    mpfr_set_zero(dst, 1);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_div_ui(term, term, x, MPFR_RNDN);  // 1/x
    unsigned long k = 0;
    while (!mpfr_zero_p(term) && mpfr_get_exp(term) > -(long)wp) {
      mpfr_div_ui(tmp, term, 2 * k + 1, MPFR_RNDN);
      if (k % 2 == 0)
        mpfr_add(dst, dst, tmp, MPFR_RNDN);
      else
        mpfr_sub(dst, dst, tmp, MPFR_RNDN);
      mpfr_div_ui(term, term, x * x, MPFR_RNDN);
      ++k;
    }
  };

  mpfr_t a5, a239;
  mpfr_inits2(wp, a5, a239, (mpfr_ptr)nullptr);
  arctan_inv(a5, 5);
  arctan_inv(a239, 239);
  mpfr_mul_ui(a5, a5, 16, MPFR_RNDN);
  mpfr_mul_ui(a239, a239, 4, MPFR_RNDN);
  mpfr_sub(acc, a5, a239, MPFR_RNDN);
  mpfr_set_prec(out, prec);
  mpfr_set(out, acc, MPFR_RNDN);
  mpfr_clears(acc, term, tmp, a5, a239, (mpfr_ptr)nullptr);
}

/// pi via the Brent-Salamin AGM iteration.
inline void agm_pi(mpfr_t out, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  mpfr_t a, b, t, p, an, tmp;
  mpfr_inits2(wp, a, b, t, p, an, tmp, (mpfr_ptr)nullptr);
  mpfr_set_ui(a, 1, MPFR_RNDN);
  mpfr_sqrt_ui(b, 2, MPFR_RNDN);
  mpfr_ui_div(b, 1, b, MPFR_RNDN);
  mpfr_set_d(t, 0.25, MPFR_RNDN);
  mpfr_set_ui(p, 1, MPFR_RNDN);
  for (int i = 0; i < 64; ++i) {
    mpfr_add(an, a, b, MPFR_RNDN);
    mpfr_div_2ui(an, an, 1, MPFR_RNDN);
    mpfr_mul(b, a, b, MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_sub(tmp, a, an, MPFR_RNDN);
    mpfr_mul(tmp, tmp, tmp, MPFR_RNDN);
    mpfr_mul(tmp, tmp, p, MPFR_RNDN);
    mpfr_sub(t, t, tmp, MPFR_RNDN);
    mpfr_mul_2ui(p, p, 1, MPFR_RNDN);
    mpfr_set(a, an, MPFR_RNDN);
    mpfr_sub(tmp, a, b, MPFR_RNDN);
    if (mpfr_zero_p(tmp) || mpfr_get_exp(tmp) < -(long)wp + 8) break;
  }
  mpfr_add(an, a, b, MPFR_RNDN);
  mpfr_mul(an, an, an, MPFR_RNDN);
  mpfr_mul_2ui(t, t, 2, MPFR_RNDN);
  mpfr_div(an, an, t, MPFR_RNDN);
  mpfr_set_prec(out, prec);
  mpfr_set(out, an, MPFR_RNDN);
  mpfr_clears(a, b, t, p, an, tmp, (mpfr_ptr)nullptr);
}

/// psi(a/q) straight from MPFR (implementation-independent oracle).
inline void mpfr_psi(mpfr_t out, long a, long q, mpfr_prec_t prec) {
  mpfr_t x;
  mpfr_init2(x, prec + 32);
  mpfr_set_si(x, a, MPFR_RNDN);
  mpfr_div_si(x, x, q, MPFR_RNDN);
  mpfr_set_prec(out, prec);
  mpfr_digamma(out, x, MPFR_RNDN);
  mpfr_clear(x);
}

}  // namespace oracle
