#include "lcert/relations.hpp"

#include <algorithm>

#include "lcert/errors.hpp"
#include "lcert/lll.hpp"
#include "lcert/nt.hpp"

namespace lcert {

namespace {

long bits_of(const mpz_class& b) {
  return static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
}

void check_precision(size_t unknowns, const mpz_class& B,
                     const PrecisionContext& ctx) {
  if (static_cast<long>(ctx.bits) <
      static_cast<long>(unknowns) * bits_of(B) + 128)
    fail(errc::precision_too_low,
         "need bits >= n*log2(B) + 128 for this search");
}

// detection scale 2^(bits - 64); inputs must be known at least that well
void check_uncertainty(const std::vector<Real>& xs, const mpz_class& B,
                       const PrecisionContext& ctx) {
  long limit = 48 - static_cast<long>(ctx.bits) - bits_of(B);
  for (const auto& x : xs)
    if (!x.exact() && x.err_exp() > limit)
      fail(errc::values_too_uncertain,
           "input error bounds exceed the detection scale");
}

Real sqrt_of_mpz(const mpz_class& n) {
  Real r(128);
  mpfr_set_z(r.raw_mut(), n.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(r.raw_mut(), r.raw(), MPFR_RNDN);
  r.set_err_exp(r.mag_exp() - 120);
  return r;
}

// rows: [identity_n | scaled columns]; returns reduced basis
std::vector<std::vector<mpz_class>> run_reduction(
    const std::vector<std::vector<Real>>& scaled_cols, size_t n, long scale) {
  std::vector<std::vector<mpz_class>> basis(n);
  for (size_t i = 0; i < n; ++i) {
    basis[i].assign(n + scaled_cols.size(), 0);
    basis[i][i] = 1;
    for (size_t c = 0; c < scaled_cols.size(); ++c)
      basis[i][n + c] = scaled_cols[c][i].scaled_round(scale);
  }
  lll_reduce(basis);
  return basis;
}

NoRelationCertificate no_relation(
    const std::vector<std::vector<mpz_class>>& basis, const mpz_class& B,
    const PrecisionContext& ctx) {
  mpz_class best = -1;
  for (const auto& row : basis) {
    mpz_class norm2 = 0;
    for (const auto& x : row) norm2 += x * x;
    if (best < 0 || norm2 < best) best = norm2;
  }
  NoRelationCertificate cert;
  cert.bound = B;
  cert.precision_bits = ctx.bits;
  cert.norm_floor = sqrt_of_mpz(best);
  return cert;
}

}  // namespace

std::vector<mpz_class> RelationCertificate::integer_coefficients() const {
  std::vector<mpz_class> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) {
    mpq_class r = c.rational_value();
    if (r.get_den() != 1)
      fail(errc::invariant_violation, "non-integer coefficient");
    out.push_back(r.get_num());
  }
  return out;
}

Real verify_relation(const std::vector<Real>& xs,
                     const std::vector<mpz_class>& coeffs) {
  if (xs.size() != coeffs.size())
    fail(errc::out_of_range, "length mismatch");
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](const mpz_class& c) { return c == 0; }))
    fail(errc::out_of_range, "all-zero coefficients");
  mpfr_prec_t prec = 64;
  for (const auto& x : xs) prec = std::max(prec, x.precision());
  Real acc(prec);
  for (size_t i = 0; i < xs.size(); ++i)
    acc = acc + Real::of_mpz(coeffs[i], prec) * xs[i];
  return acc.abs();
}

Real verify_relation(const std::vector<Real>& xs,
                     const std::vector<CycloElt>& coeffs,
                     const PrecisionContext& ctx) {
  if (xs.size() != coeffs.size())
    fail(errc::out_of_range, "length mismatch");
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](const CycloElt& c) { return c.is_zero(); }))
    fail(errc::out_of_range, "all-zero coefficients");
  Complex acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Complex c = coeffs[i].embed(1, ctx);
    acc = acc + Complex(c.re * xs[i], c.im * xs[i]);
  }
  return acc.abs_value();
}

Real verify_relation(const std::vector<Complex>& xs,
                     const std::vector<CycloElt>& coeffs,
                     const PrecisionContext& ctx) {
  if (xs.size() != coeffs.size())
    fail(errc::out_of_range, "length mismatch");
  if (std::all_of(coeffs.begin(), coeffs.end(),
                  [](const CycloElt& c) { return c.is_zero(); }))
    fail(errc::out_of_range, "all-zero coefficients");
  Complex acc;
  for (size_t i = 0; i < xs.size(); ++i)
    acc = acc + coeffs[i].embed(1, ctx) * xs[i];
  return acc.abs_value();
}

RelationResult find_integer_relation(const std::vector<Real>& xs,
                                     const mpz_class& B,
                                     const PrecisionContext& ctx) {
  size_t n = xs.size();
  if (n < 2) fail(errc::out_of_range, "need at least two values");
  if (B < 1) fail(errc::out_of_range, "bound must be >= 1");
  check_precision(n, B, ctx);
  check_uncertainty(xs, B, ctx);

  long scale = static_cast<long>(ctx.bits) - 64;
  auto basis = run_reduction({xs}, n, scale);

  long accept = -static_cast<long>(ctx.bits) / 2;
  for (const auto& row : basis) {
    std::vector<mpz_class> c(row.begin(), row.begin() + n);
    bool zero = std::all_of(c.begin(), c.end(),
                            [](const mpz_class& v) { return v == 0; });
    if (zero) continue;
    bool small = std::all_of(c.begin(), c.end(), [&](const mpz_class& v) {
      return v <= B && -v <= B;
    });
    if (!small) continue;
    Real res = verify_relation(xs, c);
    if (res.abs_below_pow2(accept)) {
      RelationCertificate cert;
      cert.field_modulus = 1;
      for (const auto& v : c)
        cert.coefficients.push_back(CycloElt::rational(mpq_class(v)));
      cert.residual = res;
      cert.bound = B;
      cert.precision_bits = ctx.bits;
      return cert;
    }
  }
  return no_relation(basis, B, ctx);
}

namespace {

RelationResult field_search(const std::vector<Complex>& xs, long mm,
                            const mpz_class& B, const PrecisionContext& ctx) {
  size_t n = xs.size();
  if (n < 2) fail(errc::out_of_range, "need at least two values");
  if (B < 1) fail(errc::out_of_range, "bound must be >= 1");
  long phi = euler_phi(mm);
  size_t nn = n * static_cast<size_t>(phi);
  check_precision(nn, B, ctx);
  {
    long limit = 48 - static_cast<long>(ctx.bits) - bits_of(B);
    for (const auto& x : xs) {
      if (!x.re.exact() && x.re.err_exp() > limit)
        fail(errc::values_too_uncertain, "input error exceeds detection scale");
      if (!x.im.exact() && x.im.err_exp() > limit)
        fail(errc::values_too_uncertain, "input error exceeds detection scale");
    }
  }

  // unknowns r_ij (i < phi, j < n); a vanishing combination must kill the
  // real and imaginary parts of sum_j (sum_i r_ij zeta^i) x_j separately
  std::vector<Real> wre(nn), wim(nn);
  for (long i = 0; i < phi; ++i) {
    Complex z = CycloElt::zeta_power(mm, i).embed(1, ctx);
    for (size_t j = 0; j < n; ++j) {
      Complex w = z * xs[j];
      wre[i * n + j] = std::move(w.re);
      wim[i * n + j] = std::move(w.im);
    }
  }

  long scale = static_cast<long>(ctx.bits) - 64;
  auto basis = run_reduction({wre, wim}, nn, scale);

  long accept = -static_cast<long>(ctx.bits) / 2;
  for (const auto& row : basis) {
    bool zero = true, small = true;
    for (size_t t = 0; t < nn; ++t) {
      if (row[t] != 0) zero = false;
      if (row[t] > B || -row[t] > B) small = false;
    }
    if (zero || !small) continue;
    std::vector<CycloElt> coeffs(n);
    for (size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> cc(phi);
      for (long i = 0; i < phi; ++i) cc[i] = mpq_class(row[i * n + j]);
      coeffs[j] = CycloElt::from_coeffs(mm, std::move(cc));
    }
    Real res = verify_relation(xs, coeffs, ctx);
    if (res.abs_below_pow2(accept)) {
      RelationCertificate cert;
      cert.coefficients = std::move(coeffs);
      cert.field_modulus = mm;
      cert.residual = res;
      cert.bound = B;
      cert.precision_bits = ctx.bits;
      return cert;
    }
  }
  return no_relation(basis, B, ctx);
}

}  // namespace

RelationResult find_field_relation(const std::vector<Real>& xs, long m,
                                   const mpz_class& B,
                                   const PrecisionContext& ctx) {
  long mm = normalize_conductor(m);
  if (mm < 1) fail(errc::out_of_range, "field modulus must be >= 1");
  if (mm == 1) return find_integer_relation(xs, B, ctx);
  std::vector<Complex> zs;
  zs.reserve(xs.size());
  for (const auto& x : xs) zs.push_back(Complex::of_real(x));
  return field_search(zs, mm, B, ctx);
}

RelationResult find_field_relation(const std::vector<Complex>& xs, long m,
                                   const mpz_class& B,
                                   const PrecisionContext& ctx) {
  long mm = normalize_conductor(m);
  if (mm < 1) fail(errc::out_of_range, "field modulus must be >= 1");
  return field_search(xs, mm, B, ctx);
}

}  // namespace lcert
