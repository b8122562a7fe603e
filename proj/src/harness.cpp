#include "lcert/harness.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <optional>

#include "lcert/errors.hpp"
#include "lcert/nt.hpp"
#include "lcert/parallel.hpp"

namespace lcert {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::anomaly: return "anomaly";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

namespace {

bool escalation_worthy(const error& e) {
  switch (e.code()) {
    case errc::precision_too_low:
    case errc::values_too_uncertain:
    case errc::precision_exhausted:
      return true;
    default:
      return false;
  }
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

long checked_product(const std::vector<long>& xs) {
  long p = 1;
  for (long x : xs) {
    if (p > 1'000'000'000'000L / std::max(x, 1L))
      fail(errc::too_large, "modulus product too large");
    p *= x;
  }
  return p;
}

Certificate nonvanishing_certificate(const Complex& v,
                                     const PrecisionContext& ctx) {
  Real mag = v.abs_value();
  Certificate cert;
  cert.kind = "nonvanishing";
  cert.precision_bits = ctx.bits;
  if (mag.exact())
    cert.residual = mag;
  else
    cert.residual = mag - Real::pow2(mag.err_exp(), mag.precision());
  return cert;
}

// one escalation pass of a pooled relation experiment; nullopt = escalate
std::optional<Verdict> pool_pass(
    VerificationReport& rep, long m, const mpz_class& B,
    const PrecisionContext& ctx, bool inject_dependent,
    const std::function<void(const PrecisionContext&, VerificationReport&,
                             std::vector<Complex>&)>& collect,
    const std::function<bool(const PrecisionContext&, VerificationReport&)>&
        extra) {
  std::vector<Complex> pool;
  collect(ctx, rep, pool);
  if (inject_dependent) {
    if (pool.size() < 2)
      fail(errc::out_of_range, "dependent injection needs a pool of >= 2");
    Complex v = pool[0] + pool[1];
    Subject s;
    s.id = "injected-sum";
    s.kind = "injected";
    s.method = "synthetic";
    s.value = v;
    rep.subjects.push_back(std::move(s));
    pool.push_back(std::move(v));
  }

  if (extra && extra(ctx, rep)) return Verdict::anomaly;

  if (pool.empty()) {
    rep.notes.push_back("value pool is empty; independence holds vacuously");
    return Verdict::consistent;
  }
  if (pool.size() == 1) {
    // independence of a single value is exactly its non-vanishing
    Certificate cert = nonvanishing_certificate(pool[0], ctx);
    if (!pool[0].definitely_nonzero()) return std::nullopt;
    rep.notes.push_back("single value: relation search replaced by a "
                        "non-vanishing check");
    rep.certificates.push_back(std::move(cert));
    return Verdict::consistent;
  }

  RelationResult res = find_field_relation(pool, m, B, ctx);
  Certificate cert;
  cert.bound = B;
  cert.precision_bits = ctx.bits;
  if (found_relation(res)) {
    const auto& rc = std::get<RelationCertificate>(res);
    cert.kind = "relation";
    cert.field_modulus = rc.field_modulus;
    cert.coefficients = rc.coefficients;
    cert.residual = rc.residual;
    rep.certificates.push_back(std::move(cert));
    return Verdict::anomaly;
  }
  const auto& nc = std::get<NoRelationCertificate>(res);
  cert.kind = "no-relation";
  cert.field_modulus = m;
  cert.residual = nc.norm_floor;
  rep.certificates.push_back(std::move(cert));
  return Verdict::consistent;
}

VerificationReport run_pool_experiment(
    std::string experiment, const std::vector<long>& qs, long m,
    const mpz_class& B, const EscalationPolicy& esc, bool inject_dependent,
    const std::function<void(VerificationReport&)>& hypothesis,
    const std::function<void(const PrecisionContext&, VerificationReport&,
                             std::vector<Complex>&)>& collect,
    const std::function<bool(const PrecisionContext&, VerificationReport&)>&
        extra = {}) {
  Timer timer;
  VerificationReport rep;
  rep.experiment = std::move(experiment);
  rep.moduli = qs;
  rep.bound = B;
  rep.coeff_modulus = normalize_conductor(m);
  hypothesis(rep);

  std::vector<std::string> base_notes = rep.notes;
  for (long bits = esc.start_bits; bits <= esc.max_bits; bits *= 2) {
    rep.subjects.clear();
    rep.certificates.clear();
    rep.notes = base_notes;
    rep.precision_bits = bits;
    PrecisionContext ctx(bits);
    try {
      auto verdict =
          pool_pass(rep, m, B, ctx, inject_dependent, collect, extra);
      if (verdict) {
        rep.verdict = *verdict;
        rep.wall_seconds = timer.seconds();
        return rep;
      }
      rep.notes.push_back("undecided at " + std::to_string(bits) +
                          " bits; escalating");
      base_notes = rep.notes;
    } catch (const error& e) {
      if (!escalation_worthy(e)) throw;
      rep.notes.push_back(std::string(e.what()) + " at " +
                          std::to_string(bits) + " bits; escalating");
      base_notes = rep.notes;
    }
  }
  rep.verdict = Verdict::undecided;
  rep.wall_seconds = timer.seconds();
  return rep;
}

void collect_characters(const std::vector<long>& qs, int parity_mask,
                        const PrecisionContext& ctx, VerificationReport& rep,
                        std::vector<Complex>& pool) {
  // parity_mask: 1 = odd, 2 = even nontrivial, 3 = all nontrivial
  for (long q : qs) {
    auto chars = enumerate_characters(q);
    for (size_t k = 0; k < chars.size(); ++k) {
      const auto& chi = chars[k];
      if (chi.is_trivial()) continue;
      if (chi.is_odd() ? !(parity_mask & 1) : !(parity_mask & 2)) continue;
      auto rec = l_one_digamma(PeriodicFunction::from_character(chi), ctx);
      Subject s;
      s.id = "chi_" + std::to_string(q) + "_" + std::to_string(k);
      s.kind = "character";
      s.method = lmethod_name(rec.method);
      s.value = rec.value;
      rep.subjects.push_back(std::move(s));
      pool.push_back(std::move(rec.value));
    }
  }
}

void require_pairwise(const std::vector<long>& qs) {
  for (long q : qs)
    if (q <= 2) fail(errc::out_of_range, "each modulus must be > 2");
  if (qs.empty()) fail(errc::out_of_range, "need at least one modulus");
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = i + 1; j < qs.size(); ++j)
      if (std::gcd(qs[i], qs[j]) != 1)
        fail(errc::hypothesis_failed, "moduli are not pairwise coprime");
}

void require_field_disjoint(long m, const std::vector<long>& qs) {
  long prod = checked_product(qs);
  if (cyclotomic_intersection_modulus(m, prod) != 1)
    fail(errc::hypothesis_failed,
         "coefficient field meets the character value field");
}

}  // namespace

std::pair<bool, bool> check_hypothesis_coprime(const std::vector<long>& qs) {
  for (long q : qs)
    if (q <= 2) fail(errc::out_of_range, "each modulus must be > 2");
  bool pairwise = true;
  for (size_t i = 0; i < qs.size() && pairwise; ++i)
    for (size_t j = i + 1; j < qs.size(); ++j)
      if (std::gcd(qs[i], qs[j]) != 1) {
        pairwise = false;
        break;
      }
  mpz_class prod = 1, phiprod = 1;
  for (long q : qs) {
    prod *= q;
    phiprod *= euler_phi(q);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), prod.get_mpz_t(), phiprod.get_mpz_t());
  return {pairwise, pairwise && g == 1};
}

VerificationReport verify_theorem_odd(const std::vector<long>& qs, long m,
                                      const mpz_class& B,
                                      const EscalationPolicy& esc,
                                      bool inject_dependent) {
  return run_pool_experiment(
      "independence-odd", qs, m, B, esc, inject_dependent,
      [&](VerificationReport& rep) {
        require_pairwise(qs);
        require_field_disjoint(m, qs);
        auto [pw, gc] = check_hypothesis_coprime(qs);
        rep.hyp_pairwise = pw;
        rep.hyp_gcd = gc;
        rep.notes.push_back("coefficients restricted to Q(zeta_" +
                            std::to_string(normalize_conductor(m)) + ")");
      },
      [&](const PrecisionContext& ctx, VerificationReport& rep,
          std::vector<Complex>& pool) {
        collect_characters(qs, 1, ctx, rep, pool);
      });
}

VerificationReport verify_theorem_even(const std::vector<long>& qs, long m,
                                       const mpz_class& B,
                                       const EscalationPolicy& esc,
                                       bool inject_dependent) {
  return run_pool_experiment(
      "independence-even", qs, m, B, esc, inject_dependent,
      [&](VerificationReport& rep) {
        require_pairwise(qs);
        require_field_disjoint(m, qs);
        auto [pw, gc] = check_hypothesis_coprime(qs);
        rep.hyp_pairwise = pw;
        rep.hyp_gcd = gc;
        rep.notes.push_back("coefficients restricted to Q(zeta_" +
                            std::to_string(normalize_conductor(m)) + ")");
      },
      [&](const PrecisionContext& ctx, VerificationReport& rep,
          std::vector<Complex>& pool) {
        collect_characters(qs, 2, ctx, rep, pool);
      },
      [&](const PrecisionContext& ctx, VerificationReport& rep) {
        std::vector<RamachandraUnit> units;
        for (long q : qs) {
          if (q <= 4) continue;
          auto us = ramachandra_units(q);
          units.insert(units.end(), us.begin(), us.end());
        }
        if (units.empty()) {
          rep.notes.push_back("no units to certify (all moduli <= 4)");
          return false;
        }
        RankCertificate rc = multiplicative_independence_rank(units, ctx);
        Certificate cert;
        cert.kind = "rank";
        cert.rank = rc.rank;
        cert.precision_bits = rc.precision_bits;
        rep.certificates.push_back(std::move(cert));
        if (!rc.full) {
          rep.notes.push_back("pooled unit system is multiplicatively "
                              "dependent");
          return true;
        }
        return false;
      });
}

VerificationReport verify_theorem_all(const std::vector<long>& qs, long m,
                                      const mpz_class& B,
                                      const EscalationPolicy& esc,
                                      bool inject_dependent) {
  return run_pool_experiment(
      "independence-all", qs, m, B, esc, inject_dependent,
      [&](VerificationReport& rep) {
        require_pairwise(qs);
        auto [pw, gc] = check_hypothesis_coprime(qs);
        rep.hyp_pairwise = pw;
        rep.hyp_gcd = gc;
        if (qs.size() >= 2) {
          // cross-modulus pooling needs the full coprimality package; a
          // single modulus does not
          if (!gc)
            fail(errc::hypothesis_failed,
                 "modulus product shares a factor with the phi product");
          long phiprod = 1;
          for (long q : qs) phiprod = checked_product({phiprod, euler_phi(q)});
          require_field_disjoint(checked_product({m, phiprod}), qs);
        } else {
          require_field_disjoint(m, qs);
        }
        rep.notes.push_back("coefficients restricted to Q(zeta_" +
                            std::to_string(normalize_conductor(m)) + ")");
        rep.notes.push_back("pool mixes pi-type odd values and log-type even "
                            "values");
      },
      [&](const PrecisionContext& ctx, VerificationReport& rep,
          std::vector<Complex>& pool) {
        collect_characters(qs, 3, ctx, rep, pool);
      });
}

VerificationReport verify_okada(const std::vector<long>& qs, long k,
                                const mpz_class& B,
                                const EscalationPolicy& esc,
                                bool inject_dependent) {
  if (k < 1) fail(errc::out_of_range, "derivative order must be >= 1");
  return run_pool_experiment(
      "cot-derivative-" + std::to_string(k), qs, 1, B, esc, inject_dependent,
      [&](VerificationReport& rep) {
        require_pairwise(qs);
        auto [pw, gc] = check_hypothesis_coprime(qs);
        rep.hyp_pairwise = pw;
        rep.hyp_gcd = gc;
      },
      [&](const PrecisionContext& ctx, VerificationReport& rep,
          std::vector<Complex>& pool) {
        for (long q : qs) {
          for (long a = 1; 2 * a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            Real v = cot_derivative(k, a, q, ctx);
            Subject s;
            s.id = "cot_" + std::to_string(q) + "_" + std::to_string(a);
            s.kind = "cot-derivative";
            s.method = "cot-derivative";
            s.value = Complex::of_real(v);
            rep.subjects.push_back(std::move(s));
            pool.push_back(Complex::of_real(std::move(v)));
          }
        }
      });
}

bool verify_cot_identity(long q) {
  if (q <= 2) fail(errc::out_of_range, "modulus must be > 2");
  PrecisionContext ctx(256);
  for (long a = 1; 2 * a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    CycloElt z = CycloElt::zeta_power(q, a);
    CycloElt one = CycloElt::integer(1);
    CycloElt e = (z + one) / (z - one);
    // purely imaginary iff complex conjugation negates it
    if (!(e.conj() == -e)) return false;
    Complex num = e.embed(1, ctx);
    Complex target(Real(), -cot_pi(a, q, ctx));
    if ((num - target).abs_value().definitely_nonzero()) return false;
  }
  return true;
}

bool verify_group_lemma(long q, bool parity_quotient) {
  if (q <= 2) fail(errc::out_of_range, "modulus must be > 2");
  auto chars = enumerate_characters(q);
  std::vector<long> reps;
  std::vector<DirichletCharacter> rows;
  if (parity_quotient) {
    // classes {a, q - a}, represented by the smaller member
    for (long a : coprime_residues(q))
      if (a < q - a) reps.push_back(a);
    if (reps.empty()) reps.push_back(1);
    for (const auto& chi : chars)
      if (chi.is_even() && !chi.is_trivial()) rows.push_back(chi);
  } else {
    reps = coprime_residues(q);
    for (const auto& chi : chars)
      if (!chi.is_trivial()) rows.push_back(chi);
  }
  std::vector<long> cols;
  for (long a : reps)
    if (a != 1) cols.push_back(a);
  if (rows.size() != cols.size())
    fail(errc::invariant_violation, "character/element count mismatch");
  size_t n = rows.size();
  if (n == 0) return true;

  std::vector<std::vector<CycloElt>> mat(n, std::vector<CycloElt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mat[i][j] = rows[i].value(cols[j]);

  // exact Gaussian elimination; determinant is nonzero iff full pivot rank
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && mat[piv][c].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(mat[piv], mat[c]);
    for (size_t r = c + 1; r < n; ++r) {
      if (mat[r][c].is_zero()) continue;
      CycloElt f = mat[r][c] / mat[c][c];
      for (size_t j = c; j < n; ++j)
        mat[r][j] = mat[r][j] - f * mat[c][j];
    }
  }
  return true;
}

VerificationReport erdos_survey(const std::vector<long>& ps, const mpz_class& B,
                                const EscalationPolicy& esc, bool parallel) {
  Timer timer;
  for (long p : ps) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
      fail(errc::out_of_range, "survey moduli must be odd primes");
    if (p > 13) fail(errc::too_large, "exhaustive scan limited to p <= 13");
  }
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (ps[i] == ps[j]) fail(errc::out_of_range, "repeated prime");
  if (ps.empty()) fail(errc::out_of_range, "need at least one prime");

  VerificationReport rep;
  rep.experiment = "erdos-survey";
  rep.moduli = ps;
  rep.bound = B;
  auto [pw, gc] = check_hypothesis_coprime(ps);
  rep.hyp_pairwise = pw;
  rep.hyp_gcd = gc;

  // leg (a): exhaustive non-vanishing scan of the non-odd sign patterns
  bool scan_ok = true;
  long scan_bits = 256;
  for (; scan_bits <= esc.max_bits; scan_bits *= 2) {
    scan_ok = true;
    PrecisionContext ctx(scan_bits);
    for (long p : ps) {
      auto fns = erdos_enumerate(p, true);
      long n = static_cast<long>(fns.size());
      std::vector<NonVanishing> out(n);
      auto body = [&](long i) { out[i] = verify_nonvanishing(fns[i], ctx, true); };
      if (parallel)
        parallel_for(n, body);
      else
        serial_for(n, body);
      Real worst;
      bool first = true, all_nonzero = true;
      for (const auto& nv : out) {
        all_nonzero = all_nonzero && nv.nonzero;
        if (first || nv.margin.to_double() < worst.to_double()) {
          worst = nv.margin;
          first = false;
        }
      }
      rep.notes.push_back("p=" + std::to_string(p) + ": " + std::to_string(n) +
                          " non-odd sign patterns, min margin " +
                          std::to_string(worst.to_double()));
      scan_ok = scan_ok && all_nonzero;
    }
    if (scan_ok) break;
    rep.notes.push_back("scan undecided at " + std::to_string(scan_bits) +
                        " bits; escalating");
  }
  if (!scan_ok) {
    rep.verdict = Verdict::undecided;
    rep.wall_seconds = timer.seconds();
    return rep;
  }

  // leg (b): one representative function per prime, joint relation search
  if (!gc) {
    rep.notes.push_back("gcd hypothesis fails; independence leg skipped");
    rep.verdict = Verdict::consistent;
    rep.precision_bits = scan_bits;
    rep.wall_seconds = timer.seconds();
    return rep;
  }

  for (long bits = esc.start_bits; bits <= esc.max_bits; bits *= 2) {
    rep.precision_bits = bits;
    PrecisionContext ctx(bits);
    std::vector<Complex> pool;
    std::vector<Subject> subjects;
    for (long p : ps) {
      // the all-plus pattern: even, hence not odd
      PeriodicFunction f =
          PeriodicFunction::from_signs(p, std::vector<int>(p - 1, 1));
      auto rec = l_one_digamma(f, ctx, true);
      Subject s;
      s.id = "erdos_" + std::to_string(p) + "_allplus";
      s.kind = "erdos";
      s.method = lmethod_name(rec.method);
      s.value = rec.value;
      subjects.push_back(std::move(s));
      pool.push_back(std::move(rec.value));
    }
    try {
      rep.subjects = subjects;
      if (pool.size() == 1) {
        if (!pool[0].definitely_nonzero()) continue;
        rep.certificates.push_back(nonvanishing_certificate(pool[0], ctx));
        rep.verdict = Verdict::consistent;
        rep.wall_seconds = timer.seconds();
        return rep;
      }
      RelationResult res = find_field_relation(pool, 1, B, ctx);
      Certificate cert;
      cert.bound = B;
      cert.precision_bits = bits;
      if (found_relation(res)) {
        const auto& rc = std::get<RelationCertificate>(res);
        cert.kind = "relation";
        cert.coefficients = rc.coefficients;
        cert.residual = rc.residual;
        rep.certificates.push_back(std::move(cert));
        rep.verdict = Verdict::anomaly;
      } else {
        cert.kind = "no-relation";
        cert.residual = std::get<NoRelationCertificate>(res).norm_floor;
        rep.certificates.push_back(std::move(cert));
        rep.verdict = Verdict::consistent;
      }
      rep.wall_seconds = timer.seconds();
      return rep;
    } catch (const error& e) {
      if (!escalation_worthy(e)) throw;
      rep.notes.push_back(std::string(e.what()) + " at " +
                          std::to_string(bits) + " bits; escalating");
    }
  }
  rep.verdict = Verdict::undecided;
  rep.wall_seconds = timer.seconds();
  return rep;
}

std::pair<std::vector<long>, std::vector<long>> sophie_germain_chain(
    long limit) {
  if (limit < 5) fail(errc::out_of_range, "limit must be >= 5");
  std::vector<long> b, c;
  for (long p = 5; p <= limit; p += 2)
    if (is_prime(p) && is_prime((p - 1) / 2)) b.push_back(p);
  for (long p : b)
    if (c.empty() || p > 2 * c.back() + 1) c.push_back(p);
  return {b, c};
}

}  // namespace lcert
