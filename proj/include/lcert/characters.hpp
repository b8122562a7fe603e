#pragma once

// Structure of (Z/qZ)^x, Dirichlet characters mod q with parity, and
// periodic functions (Dirichlet-type, Erdosian) with parity decomposition
// and character expansion.

#include <memory>
#include <vector>

#include "lcert/cyclotomic.hpp"

namespace lcert {

struct Generator {
  long residue;  // mod q, == 1 mod the complementary factor
  long order;
};

/// Generators of (Z/qZ)^x via CRT over prime-power factors, with
/// discrete logarithms solved per cyclic factor by baby-step giant-step.
class UnitGroupStructure {
 public:
  explicit UnitGroupStructure(long q);

  long modulus() const { return q_; }
  const std::vector<Generator>& generators() const { return gens_; }
  long order() const { return phi_; }      // phi(q)
  long exponent() const { return expo_; }  // lcm of generator orders

  /// Exponent vector of a against the generators; throws NotCoprime.
  std::vector<long> dlog(long a) const;

 private:
  struct Factor {
    long pk;                  // prime power p^e
    std::vector<size_t> gi;   // indices into gens_ belonging to this factor
    std::vector<long> local;  // local generator residues mod pk
  };

  long q_, phi_, expo_;
  std::vector<Generator> gens_;
  std::vector<Factor> factors_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> g,
                     std::vector<long> exps);

  long modulus() const { return g_->modulus(); }
  const std::vector<long>& exponents() const { return e_; }
  const UnitGroupStructure& group() const { return *g_; }

  bool is_trivial() const;
  bool is_even() const { return even_; }
  bool is_odd() const { return !even_; }
  long order() const;  // order in the character group

  /// chi(a): 0 if gcd(a, q) > 1, else a root of unity in Q(zeta_M),
  /// M = group exponent.
  CycloElt value(long a) const;
  /// Exponent t with chi(a) = zeta_M^t; throws NotCoprime for non-units.
  long value_exponent(long a) const;

  DirichletCharacter conj_character() const;
  friend bool operator==(const DirichletCharacter& a,
                         const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.e_ == b.e_;
  }

 private:
  std::shared_ptr<const UnitGroupStructure> g_;
  std::vector<long> e_;
  bool even_;
};

/// All phi(q) characters mod q; the trivial character comes first.
std::vector<DirichletCharacter> enumerate_characters(long q);

/// f: Z -> Qbar with period q, stored as f(1) .. f(q).
class PeriodicFunction {
 public:
  PeriodicFunction(long q, std::vector<CycloElt> values);

  static PeriodicFunction from_character(const DirichletCharacter& chi);
  /// Erdosian function mod p from signs at 1 .. p-1 (each +-1), f(p) = 0.
  static PeriodicFunction from_signs(long p, const std::vector<int>& signs);
  static PeriodicFunction zero(long q);

  long period() const { return q_; }
  /// f(n) for any n >= 1.
  const CycloElt& value(long n) const;
  const std::vector<CycloElt>& values() const { return v_; }

  bool dirichlet_type() const { return dirichlet_type_; }
  bool erdosian() const { return erdosian_; }
  const CycloElt& period_sum() const { return sum_; }

  bool is_odd_function() const;   // f(-a) = -f(a)
  bool is_even_function() const;  // f(-a) = f(a)

  friend PeriodicFunction operator+(const PeriodicFunction& a,
                                    const PeriodicFunction& b);
  friend PeriodicFunction operator-(const PeriodicFunction& a,
                                    const PeriodicFunction& b);
  friend PeriodicFunction operator*(const PeriodicFunction& a,
                                    const mpq_class& s);
  friend bool operator==(const PeriodicFunction& a, const PeriodicFunction& b);

 private:
  long q_;
  std::vector<CycloElt> v_;  // v_[i] = f(i + 1)
  CycloElt sum_;
  bool dirichlet_type_, erdosian_;
};

/// f = f_e + f_o with f_e even and f_o odd, via f_e(a) = (f(a) + f(-a))/2.
std::pair<PeriodicFunction, PeriodicFunction> decompose_parity(
    const PeriodicFunction& f);

/// Coefficients c_chi with f = sum c_chi * chi, aligned with
/// enumerate_characters(q); requires f of Dirichlet type.
std::vector<CycloElt> character_expansion(const PeriodicFunction& f);

/// All 2^(p-1) Erdosian sign patterns mod an odd prime p <= 31,
/// optionally excluding the odd functions.
std::vector<PeriodicFunction> erdos_enumerate(long p, bool exclude_odd = false);

}  // namespace lcert
