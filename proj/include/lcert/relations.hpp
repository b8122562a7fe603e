#pragma once

// Integer-relation detection over arbitrary-precision values, with
// rational-integer or cyclotomic-field coefficients, producing signed
// certificates.  A NoRelationCertificate is evidence only, never a proof
// of linear independence.

#include <variant>
#include <vector>

#include "lcert/cyclotomic.hpp"
#include "lcert/numerics.hpp"

namespace lcert {

struct RelationCertificate {
  std::vector<CycloElt> coefficients;  // exact, not all zero
  long field_modulus = 1;              // 1 = rational-integer coefficients
  Real residual;                       // verified |sum c_i x_i| upper bound
  mpz_class bound;                     // searched max |coefficient entry|
  long precision_bits = 0;

  /// Integer coefficient view; valid when field_modulus == 1.
  std::vector<mpz_class> integer_coefficients() const;
};

struct NoRelationCertificate {
  mpz_class bound;
  long precision_bits = 0;
  Real norm_floor;  // shortest reduced lattice vector found (evidence)
};

using RelationResult = std::variant<RelationCertificate, NoRelationCertificate>;

inline bool found_relation(const RelationResult& r) {
  return std::holds_alternative<RelationCertificate>(r);
}

/// Search for integers c (not all 0, |c_i| <= B) with sum c_i x_i = 0.
/// Requires ctx.bits >= n log2(B) + 128 (PrecisionTooLow) and input error
/// bounds small enough for the detection scale (ValuesTooUncertain).
RelationResult find_integer_relation(const std::vector<Real>& xs,
                                     const mpz_class& B,
                                     const PrecisionContext& ctx);

/// Same search with coefficients in Q(zeta_m) (integer combinations of
/// zeta_m powers, each integer bounded by B).  m = 1 delegates to
/// find_integer_relation.
RelationResult find_field_relation(const std::vector<Real>& xs, long m,
                                   const mpz_class& B,
                                   const PrecisionContext& ctx);

/// Complex-value variant: the real and imaginary parts of the combination
/// must vanish simultaneously (two-constraint lattice).
RelationResult find_field_relation(const std::vector<Complex>& xs, long m,
                                   const mpz_class& B,
                                   const PrecisionContext& ctx);

/// |sum c_i x_i| with propagated error; rejects all-zero coefficients.
Real verify_relation(const std::vector<Real>& xs,
                     const std::vector<mpz_class>& coeffs);
Real verify_relation(const std::vector<Real>& xs,
                     const std::vector<CycloElt>& coeffs,
                     const PrecisionContext& ctx);
Real verify_relation(const std::vector<Complex>& xs,
                     const std::vector<CycloElt>& coeffs,
                     const PrecisionContext& ctx);

}  // namespace lcert
