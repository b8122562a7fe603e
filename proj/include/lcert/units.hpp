#pragma once

// Ramachandra units xi_a = zeta_q^{d_a} * eta_a: exact construction with
// verified invariants (real, norm +-1), log-embedding matrices, and
// error-aware multiplicative-independence rank certification.

#include <vector>

#include "lcert/cyclotomic.hpp"

namespace lcert {

struct RamachandraUnit {
  long q = 0;      // modulus (> 4)
  long a = 0;      // index, 1 < a < q/2, gcd(a, q) = 1
  long d_exp = 0;  // the exponent d_a reduced mod q
  CycloElt elt;    // exact value, real, norm +-1
};

/// d_a = (1 - a)/2 * sum of divisors d | q, d != q, gcd(d, q/d) = 1,
/// resolved in Z/qZ.
long d_exponent(long q, long a);

/// eta_a = prod (1 - zeta_q^{ad}) / (1 - zeta_q^d) over the same divisors.
CycloElt eta(long q, long a);

/// The unit xi_a with all invariants checked at construction.
RamachandraUnit xi(long q, long a);

/// S_q = { a : 1 < a < q/2, gcd(a, q) = 1 }; requires q > 4.
std::vector<long> ramachandra_index_set(long q);
std::vector<RamachandraUnit> ramachandra_units(long q);

using RealMatrix = std::vector<std::vector<Real>>;

/// Rows: units; columns: embedding representatives k with 1 <= k < Q/2,
/// gcd(k, Q) = 1, Q = normalized lcm of the unit moduli (one per conjugate
/// pair of the real subfield); entries log|sigma_k(xi)|.  Distinct moduli
/// must be pairwise coprime.
RealMatrix log_embedding_matrix(const std::vector<RamachandraUnit>& units,
                                const PrecisionContext& ctx,
                                bool parallel = true);

struct RankCertificate {
  long rank = 0;
  bool full = false;  // rank == number of units (independence certified)
  long precision_bits = 0;
  std::vector<size_t> pivot_columns;
};

/// Numerical rank of the log-embedding matrix with error-aware pivoting.
/// A stalled elimination triggers an exact integer-relation search on the
/// rows; if that cannot decide either, throws PrecisionExhausted.
RankCertificate multiplicative_independence_rank(
    const std::vector<RamachandraUnit>& units, const PrecisionContext& ctx);

}  // namespace lcert
