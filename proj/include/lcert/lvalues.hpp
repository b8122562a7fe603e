#pragma once

// L(1, chi) and L(1, f) by independent methods: truncated series (low
// precision oracle), digamma closed form (workhorse), cotangent formula
// (odd characters), and the log-unit decomposition (even characters).

#include "lcert/characters.hpp"
#include "lcert/numerics.hpp"

namespace lcert {

enum class LMethod { series, digamma, cotangent, logform };
const char* lmethod_name(LMethod m);

struct LValueRecord {
  LMethod method = LMethod::digamma;
  Complex value;
  long precision_bits = 0;
};

/// Partial sum to N with an Abel-summation tail bound; precision claims
/// are capped at 1e-6 regardless of N.  Requires zero period sum.
LValueRecord l_one_series(const PeriodicFunction& f, long N,
                          const PrecisionContext& ctx);

/// L(1, f) = -(1/q) sum f(a) psi(a/q).  With regularize set, a nonzero
/// period sum rho*q is allowed and the finite part -(1/q) sum f(a) psi(a/q)
/// - rho log q is returned instead of an error.
LValueRecord l_one_digamma(const PeriodicFunction& f,
                           const PrecisionContext& ctx,
                           bool regularize = false);

/// (pi/q) sum over 1 <= a < q/2, gcd(a,q)=1 of chi(a) cot(pi a/q).
LValueRecord l_one_cot(const DirichletCharacter& chi,
                       const PrecisionContext& ctx);

struct LogFormResult {
  LValueRecord record;
  Complex delta;    // L(1, chi) / unitsum
  Complex unitsum;  // sum over S_q of conj(chi(a)) log xi_a
};

/// Even nontrivial chi, q > 4; throws UnitSumVanishes if the unit sum
/// cannot be bounded away from zero.
LogFormResult l_one_logform(const DirichletCharacter& chi,
                            const PrecisionContext& ctx);

struct NonVanishing {
  bool nonzero = false;
  Real margin;  // |value| minus the error radius
};

/// Error-aware non-vanishing check of L(1, f) via the digamma form.
/// A false result means undecided at this precision, not a zero claim.
NonVanishing verify_nonvanishing(const PeriodicFunction& f,
                                 const PrecisionContext& ctx,
                                 bool regularize = false);

/// True iff the two values agree to within their combined error bounds.
bool cross_check(const LValueRecord& a, const LValueRecord& b);

}  // namespace lcert
