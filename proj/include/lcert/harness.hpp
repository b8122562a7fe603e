#pragma once

// Theorem-level verification drivers: hypothesis checks, value collection,
// relation searches with precision auto-escalation, exact identity suites,
// and report assembly.

#include <string>
#include <vector>

#include "lcert/lvalues.hpp"
#include "lcert/relations.hpp"
#include "lcert/units.hpp"

namespace lcert {

enum class Verdict { consistent, anomaly, undecided };
const char* verdict_name(Verdict v);

struct Subject {
  std::string id;
  std::string kind;    // "character", "erdos", "cot-derivative", ...
  std::string method;  // evaluation method
  Complex value;
};

struct Certificate {
  std::string kind;  // "relation", "no-relation", "rank", "nonvanishing"
  long field_modulus = 1;
  std::vector<CycloElt> coefficients;  // empty unless kind == "relation"
  Real residual;   // relation residual / norm floor / margin
  mpz_class bound;
  long precision_bits = 0;
  long rank = -1;  // for kind == "rank"
};

struct VerificationReport {
  std::string experiment;
  long precision_bits = 0;  // precision of the decisive pass
  mpz_class bound;
  long coeff_modulus = 1;
  std::vector<long> moduli;
  bool hyp_pairwise = true;
  bool hyp_gcd = true;
  std::vector<Subject> subjects;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::undecided;
  double wall_seconds = 0.0;
};

struct EscalationPolicy {
  long start_bits = 512;
  long max_bits = 4096;
};

/// (pairwise coprime, gcd(prod q, prod phi(q)) == 1); each q must be > 2.
std::pair<bool, bool> check_hypothesis_coprime(const std::vector<long>& qs);

/// Odd-character L(1, chi) pool over pairwise coprime moduli, relation
/// search with coefficients in Q(zeta_m).
VerificationReport verify_theorem_odd(const std::vector<long>& qs, long m,
                                      const mpz_class& B,
                                      const EscalationPolicy& esc = {},
                                      bool inject_dependent = false);

/// Even nontrivial characters; additionally certifies the multiplicative
/// independence rank of the pooled Ramachandra units.
VerificationReport verify_theorem_even(const std::vector<long>& qs, long m,
                                       const mpz_class& B,
                                       const EscalationPolicy& esc = {},
                                       bool inject_dependent = false);

/// All nontrivial characters pooled; hypothesis includes the gcd condition
/// and the conductor-intersection check for the coefficient field.
VerificationReport verify_theorem_all(const std::vector<long>& qs, long m,
                                      const mpz_class& B,
                                      const EscalationPolicy& esc = {},
                                      bool inject_dependent = false);

/// {cot^(k-1 derivative)(pi a / q)} over a in T_q, q in qs; integer
/// relation search.
VerificationReport verify_okada(const std::vector<long>& qs, long k,
                                const mpz_class& B,
                                const EscalationPolicy& esc = {},
                                bool inject_dependent = false);

/// Exact + numeric check of -i cot(pi a/q) = (zeta^a + 1)/(zeta^a - 1)
/// for all a in T_q.
bool verify_cot_identity(long q);

/// Nonsingularity of the [chi(g)] matrix over nontrivial characters and
/// g != 1, by exact cyclotomic determinant; optionally on the quotient
/// of (Z/qZ)^x by +-1.
bool verify_group_lemma(long q, bool parity_quotient);

/// (a) exhaustive non-vanishing scan of non-odd Erdosian functions mod p
/// (p <= 13); (b) relation search across one chosen f_p per p when the
/// gcd hypothesis holds.
VerificationReport erdos_survey(const std::vector<long>& ps, const mpz_class& B,
                                const EscalationPolicy& esc = {},
                                bool parallel = true);

/// B = { p <= limit prime : (p-1)/2 prime };
/// C = greedy subchain with p_{i+1} > 2 p_i + 1.
std::pair<std::vector<long>, std::vector<long>> sophie_germain_chain(
    long limit);

}  // namespace lcert
