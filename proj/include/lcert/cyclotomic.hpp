#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n), power basis modulo the
// n-th cyclotomic polynomial.  Moduli are kept normalized (n != 2 mod 4),
// which pins down the conductor and makes field intersection a plain gcd.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lcert/numerics.hpp"

namespace lcert {

/// Coefficients of the n-th cyclotomic polynomial (exact, memoized).
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

class CycloElt {
 public:
  CycloElt() : n_(1), c_{mpq_class(0)} {}

  static CycloElt rational(const mpq_class& x);
  static CycloElt integer(long x) { return rational(mpq_class(x)); }
  /// zeta_n^a, modulus normalized.
  static CycloElt zeta_power(long n, long a);
  /// Build from raw coefficients of powers zeta_n^0 .. (any length).
  static CycloElt from_coeffs(long n, std::vector<mpq_class> coeffs);

  long modulus() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // throws if not rational

  friend CycloElt operator+(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator/(const CycloElt& a, const CycloElt& b);
  CycloElt operator-() const;
  CycloElt inverse() const;  // throws DivisionByZero on zero
  friend bool operator==(const CycloElt& a, const CycloElt& b);

  friend CycloElt operator*(const CycloElt& a, const mpq_class& s);

  /// Re-express in Q(zeta_m); m must be a multiple of the modulus
  /// (after normalization).
  CycloElt to_modulus(long m) const;

  /// Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CycloElt galois(long k) const;
  CycloElt conj() const { return modulus() == 1 ? *this : galois(-1); }

  /// Product of all phi(n) conjugates; always rational.
  mpq_class absolute_norm() const;

  /// Numerical image under zeta_n -> exp(2 pi i k / n), gcd(k, n) = 1.
  Complex embed(long k, const PrecisionContext& ctx) const;

  std::string to_string() const;

 private:
  CycloElt(long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}

  long n_;                    // normalized: n >= 1, n % 4 != 2
  std::vector<mpq_class> c_;  // length phi(n), reduced mod Phi_n
};

/// Conductor of Q(zeta_m) intersect Q(zeta_n); 1 encodes Q.
long cyclotomic_intersection_modulus(long m, long n);

}  // namespace lcert
