#include "lcert/units.hpp"

#include <algorithm>
#include <numeric>

#include "lcert/errors.hpp"
#include "lcert/nt.hpp"
#include "lcert/parallel.hpp"
#include "lcert/relations.hpp"

namespace lcert {

namespace {

void check_index(long q, long a) {
  if (q <= 4) fail(errc::invalid_index, "modulus must exceed 4");
  if (a <= 1 || 2 * a >= q || std::gcd(a, q) != 1)
    fail(errc::invalid_index, "need 1 < a < q/2 with gcd(a, q) = 1");
}

// divisors d | q with d != q and gcd(d, q/d) = 1
std::vector<long> unitary_divisors(long q) {
  std::vector<long> ds;
  for (long d = 1; d < q; ++d)
    if (q % d == 0 && std::gcd(d, q / d) == 1) ds.push_back(d);
  return ds;
}

}  // namespace

long d_exponent(long q, long a) {
  check_index(q, a);
  long s = 0;
  for (long d : unitary_divisors(q)) s = (s + d) % q;
  long one_minus_a = ((1 - a) % q + q) % q;
  long half;
  if ((1 - a) % 2 == 0) {
    half = (((1 - a) / 2) % q + q) % q;
  } else {
    // a even forces q odd, so 2 is invertible mod q
    half = one_minus_a * inv_mod(2, q) % q;
  }
  return half * s % q;
}

CycloElt eta(long q, long a) {
  check_index(q, a);
  CycloElt num = CycloElt::integer(1), den = CycloElt::integer(1);
  for (long d : unitary_divisors(q)) {
    num = num * (CycloElt::integer(1) - CycloElt::zeta_power(q, a * d));
    den = den * (CycloElt::integer(1) - CycloElt::zeta_power(q, d));
  }
  return num / den;
}

RamachandraUnit xi(long q, long a) {
  RamachandraUnit u;
  u.q = q;
  u.a = a;
  u.d_exp = d_exponent(q, a);
  u.elt = CycloElt::zeta_power(q, u.d_exp) * eta(q, a);
  if (!(u.elt.conj() == u.elt))
    fail(errc::invariant_violation, "xi not fixed by conjugation");
  mpq_class nrm = u.elt.absolute_norm();
  if (!(nrm == 1 || nrm == -1))
    fail(errc::invariant_violation, "xi norm not a unit");
  return u;
}

std::vector<long> ramachandra_index_set(long q) {
  if (q <= 4) fail(errc::invalid_index, "modulus must exceed 4");
  std::vector<long> s;
  for (long a = 2; 2 * a < q; ++a)
    if (std::gcd(a, q) == 1) s.push_back(a);
  return s;
}

std::vector<RamachandraUnit> ramachandra_units(long q) {
  std::vector<RamachandraUnit> out;
  for (long a : ramachandra_index_set(q)) out.push_back(xi(q, a));
  return out;
}

RealMatrix log_embedding_matrix(const std::vector<RamachandraUnit>& units,
                                const PrecisionContext& ctx, bool parallel) {
  if (units.empty()) fail(errc::out_of_range, "no units given");
  std::vector<long> moduli;
  for (const auto& u : units)
    if (std::find(moduli.begin(), moduli.end(), u.q) == moduli.end())
      moduli.push_back(u.q);
  long Q = 1;
  for (size_t i = 0; i < moduli.size(); ++i) {
    for (size_t j = i + 1; j < moduli.size(); ++j)
      if (std::gcd(moduli[i], moduli[j]) != 1)
        fail(errc::non_coprime_moduli, "unit moduli must be pairwise coprime");
    Q = std::lcm(Q, moduli[i]);
  }
  Q = normalize_conductor(Q);

  std::vector<long> cols;
  for (long k = 1; 2 * k < Q; ++k)
    if (std::gcd(k, Q) == 1) cols.push_back(k);

  RealMatrix m(units.size(), std::vector<Real>(cols.size()));
  long nwork = static_cast<long>(units.size() * cols.size());
  auto body = [&](long t) {
    size_t i = t / cols.size();
    size_t j = t % cols.size();
    Real av = units[i].elt.embed(cols[j], ctx).abs_value();
    m[i][j] = log_real(av, ctx);
  };
  if (parallel)
    parallel_for(nwork, body);
  else
    serial_for(nwork, body);
  return m;
}

RankCertificate multiplicative_independence_rank(
    const std::vector<RamachandraUnit>& units, const PrecisionContext& ctx) {
  RealMatrix m = log_embedding_matrix(units, ctx);
  size_t rows = m.size(), cols = m[0].size();

  RankCertificate cert;
  cert.precision_bits = ctx.bits;
  std::vector<bool> row_done(rows, false), col_done(cols, false);

  while (true) {
    // err-aware pivot: largest entry that provably excludes zero
    size_t pi = rows, pj = cols;
    long best = Real::kExact;
    for (size_t i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        if (!m[i][j].definitely_nonzero()) continue;
        if (pi == rows || m[i][j].mag_exp() > best) {
          best = m[i][j].mag_exp();
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    ++cert.rank;
    cert.pivot_columns.push_back(pj);
    row_done[pi] = true;
    col_done[pj] = true;
    for (size_t i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      Real f = m[i][pj] / m[pi][pj];
      for (size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        m[i][j] = m[i][j] - f * m[pi][j];
      }
    }
  }

  if (cert.rank == static_cast<long>(rows)) {
    cert.full = true;
    return cert;
  }

  // Elimination stalled: every remaining entry straddles zero.  Try to
  // certify an actual multiplicative relation among the original rows.
  RealMatrix orig = log_embedding_matrix(units, ctx);
  mpz_class B = mpz_class(1) << 20;
  try {
    // deterministic weights keep the combined scalar generic
    std::vector<Real> combined(rows);
    for (size_t i = 0; i < rows; ++i) {
      Real s(ctx.bits);
      for (size_t j = 0; j < cols; ++j)
        s = s + orig[i][j] * Real::of_long(static_cast<long>(2 * j + 3), ctx.bits);
      combined[i] = s;
    }
    auto r = find_integer_relation(combined, B, ctx);
    if (found_relation(r)) {
      auto c = std::get<RelationCertificate>(r).integer_coefficients();
      // the same coefficients must kill every column
      long accept = -static_cast<long>(ctx.bits) / 2;
      for (size_t j = 0; j < cols; ++j) {
        std::vector<Real> col(rows);
        for (size_t i = 0; i < rows; ++i) col[i] = orig[i][j];
        if (!verify_relation(col, c).abs_below_pow2(accept))
          fail(errc::precision_exhausted,
               "rank undecided: candidate relation fails columnwise");
      }
      cert.full = false;
      return cert;
    }
  } catch (const error& e) {
    if (e.code() == errc::precision_too_low ||
        e.code() == errc::values_too_uncertain)
      fail(errc::precision_exhausted,
           "rank undecided at this precision; raise bits");
    throw;
  }
  fail(errc::precision_exhausted,
       "rank undecided: no pivot and no certified relation");
}

}  // namespace lcert
