#include "lcert/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lcert/errors.hpp"
#include "lcert/nt.hpp"

namespace lcert {

namespace {

// exact division of mpz polynomials, divisor monic; remainder must be zero
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
  std::vector<mpz_class> r = num;
  long dn = static_cast<long>(r.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  std::vector<mpz_class> q(dn - dd + 1, mpz_class(0));
  for (long i = dn; i >= dd; --i) {
    mpz_class c = r[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (long j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
  }
  for (const auto& c : r)
    if (c != 0) fail(errc::invariant_violation, "inexact cyclotomic division");
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<mpz_class>&(long)> get =
      [&](long m) -> const std::vector<mpz_class>& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    std::vector<mpz_class> phi;
    if (m == 1) {
      phi = {mpz_class(-1), mpz_class(1)};  // x - 1
    } else {
      std::vector<mpz_class> num(m + 1, mpz_class(0));
      num[0] = -1;
      num[m] = 1;  // x^m - 1
      std::vector<mpz_class> den{mpz_class(1)};
      for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& pd = get(d);
        std::vector<mpz_class> nd(den.size() + pd.size() - 1, mpz_class(0));
        for (size_t i = 0; i < den.size(); ++i)
          for (size_t j = 0; j < pd.size(); ++j) nd[i + j] += den[i] * pd[j];
        den = std::move(nd);
      }
      phi = poly_div_exact(num, den);
    }
    return cache.emplace(m, std::move(phi)).first->second;
  };
  return get(n);
}

namespace {

// reduce an arbitrary-length coefficient vector to the power basis mod Phi_n
std::vector<mpq_class> reduce_mod_phi(long n, std::vector<mpq_class> v) {
  // fold exponents mod n (zeta_n^n = 1)
  if (static_cast<long>(v.size()) > n) {
    std::vector<mpq_class> w(n, mpq_class(0));
    for (size_t j = 0; j < v.size(); ++j) w[j % n] += v[j];
    v = std::move(w);
  }
  const auto& phi = cyclotomic_polynomial(n);
  size_t d = phi.size() - 1;  // = phi(n)
  if (v.size() < d) v.resize(d, mpq_class(0));
  for (size_t j = v.size(); j-- > d;) {
    mpq_class c = v[j];
    if (c == 0) continue;
    v[j] = 0;
    for (size_t i = 0; i < d; ++i) v[j - d + i] -= c * mpq_class(phi[i]);
  }
  v.resize(d);
  for (auto& c : v) c.canonicalize();
  return v;
}

}  // namespace

CycloElt CycloElt::rational(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  return CycloElt(1, {c});
}

CycloElt CycloElt::from_coeffs(long n, std::vector<mpq_class> coeffs) {
  if (n < 1) fail(errc::out_of_range, "modulus must be >= 1");
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    long m = n / 2;
    std::vector<mpq_class> w(m, mpq_class(0));
    long half = (m + 1) / 2;
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      long e = static_cast<long>(j) % n;
      long idx = (e % m) * (half % m) % m;
      if (e % 2 == 0)
        w[idx] += coeffs[j];
      else
        w[idx] -= coeffs[j];
    }
    return from_coeffs(m, std::move(w));
  }
  return CycloElt(n, reduce_mod_phi(n, std::move(coeffs)));
}

CycloElt CycloElt::zeta_power(long n, long a) {
  if (n < 1) fail(errc::out_of_range, "modulus must be >= 1");
  long e = a % n;
  if (e < 0) e += n;
  std::vector<mpq_class> v(e + 1, mpq_class(0));
  v[e] = 1;
  return from_coeffs(n, std::move(v));
}

bool CycloElt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloElt::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycloElt::rational_value() const {
  if (!is_rational()) fail(errc::invariant_violation, "element is not rational");
  return c_[0];
}

CycloElt CycloElt::to_modulus(long m) const {
  long mm = normalize_conductor(m);
  if (mm % n_ != 0) fail(errc::out_of_range, "not a supermodulus");
  if (mm == n_) return *this;
  long step = mm / n_;
  std::vector<mpq_class> v(mm, mpq_class(0));
  for (size_t j = 0; j < c_.size(); ++j) v[(j * step) % mm] += c_[j];
  return CycloElt(mm, reduce_mod_phi(mm, std::move(v)));
}

namespace {
long common_modulus(const CycloElt& a, const CycloElt& b) {
  return normalize_conductor(std::lcm(a.modulus(), b.modulus()));
}
}  // namespace

CycloElt operator+(const CycloElt& a, const CycloElt& b) {
  long L = common_modulus(a, b);
  CycloElt x = a.to_modulus(L), y = b.to_modulus(L);
  std::vector<mpq_class> v = x.coeffs();
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] += y.coeffs()[i];
    v[i].canonicalize();
  }
  return CycloElt::from_coeffs(L, std::move(v));
}

CycloElt operator-(const CycloElt& a, const CycloElt& b) { return a + (-b); }

CycloElt CycloElt::operator-() const {
  std::vector<mpq_class> v = c_;
  for (auto& c : v) c = -c;
  return CycloElt(n_, std::move(v));
}

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  long L = common_modulus(a, b);
  CycloElt x = a.to_modulus(L), y = b.to_modulus(L);
  const auto& u = x.coeffs();
  const auto& w = y.coeffs();
  std::vector<mpq_class> v(u.size() + w.size() - 1, mpq_class(0));
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) continue;
      v[i + j] += u[i] * w[j];
    }
  }
  return CycloElt::from_coeffs(L, std::move(v));
}

CycloElt operator*(const CycloElt& a, const mpq_class& s) {
  std::vector<mpq_class> v = a.coeffs();
  for (auto& c : v) {
    c *= s;
    c.canonicalize();
  }
  return CycloElt::from_coeffs(a.modulus(), std::move(v));
}

CycloElt CycloElt::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  if (n_ == 1) return rational(mpq_class(1) / c_[0]);
  // extended Euclid in Q[x] against Phi_n
  const auto& phiz = cyclotomic_polynomial(n_);
  std::vector<mpq_class> r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = mpq_class(phiz[i]);
  std::vector<mpq_class> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};

  auto deg = [](const std::vector<mpq_class>& p) {
    return static_cast<long>(p.size()) - 1;
  };
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };

  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<mpq_class> q(std::max<long>(deg(r0) - deg(r1) + 1, 1),
                             mpq_class(0));
    std::vector<mpq_class> rem = r0;
    while (deg(rem) >= deg(r1) && !rem.empty()) {
      long sh = deg(rem) - deg(r1);
      mpq_class f = rem.back() / r1.back();
      q[sh] += f;
      for (size_t i = 0; i < r1.size(); ++i) rem[sh + i] -= f * r1[i];
      trim(rem);
      if (rem.empty()) break;
    }
    // s2 = s0 - q*s1
    std::vector<mpq_class> s2(std::max(s0.size(), q.size() + s1.size() - 1),
                              mpq_class(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) break;
  }
  if (r1.empty() || deg(r1) != 0)
    fail(errc::invariant_violation, "gcd with Phi_n not constant");
  // r1 = s1 * this mod Phi; scale to 1
  mpq_class inv = mpq_class(1) / r1[0];
  for (auto& c : s1) {
    c *= inv;
    c.canonicalize();
  }
  return from_coeffs(n_, std::move(s1));
}

CycloElt operator/(const CycloElt& a, const CycloElt& b) {
  return a * b.inverse();
}

bool operator==(const CycloElt& a, const CycloElt& b) {
  long L = common_modulus(a, b);
  return a.to_modulus(L).coeffs() == b.to_modulus(L).coeffs();
}

CycloElt CycloElt::galois(long k) const {
  if (n_ == 1) return *this;
  long kk = k % n_;
  if (kk < 0) kk += n_;
  if (std::gcd(kk, n_) != 1) fail(errc::not_coprime, "galois exponent");
  std::vector<mpq_class> v(n_, mpq_class(0));
  for (size_t j = 0; j < c_.size(); ++j) v[(j * kk) % n_] += c_[j];
  return CycloElt(n_, reduce_mod_phi(n_, std::move(v)));
}

mpq_class CycloElt::absolute_norm() const {
  if (n_ == 1) return c_[0];
  CycloElt acc = CycloElt::rational(mpq_class(1));
  for (long k : coprime_residues(n_)) acc = acc * galois(k);
  if (!acc.is_rational())
    fail(errc::invariant_violation, "norm not rational");
  return acc.rational_value();
}

Complex CycloElt::embed(long k, const PrecisionContext& ctx) const {
  long kk = ((k % n_) + n_) % n_;
  if (n_ > 1 && std::gcd(kk, n_) != 1)
    fail(errc::not_coprime, "embedding index");
  mpfr_prec_t wp = ctx.bits + 32;
  Real c(wp), s(wp);
  {
    mpfr_t theta;
    mpfr_init2(theta, wp);
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_si(theta, theta, 2 * kk, MPFR_RNDN);
    mpfr_div_si(theta, theta, n_, MPFR_RNDN);
    mpfr_sin_cos(s.raw_mut(), c.raw_mut(), theta, MPFR_RNDN);
    mpfr_clear(theta);
    long e = -static_cast<long>(ctx.bits) - 8;
    c.set_err_exp(e);
    s.set_err_exp(e);
  }
  Complex z(c, s);
  Complex acc(Real::of_mpq(c_.back(), wp), Real(wp));
  for (size_t i = c_.size() - 1; i-- > 0;)
    acc = acc * z + Complex::of_real(Real::of_mpq(c_[i], wp));
  return acc;
}

std::string CycloElt::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].get_str() << ")";
    if (i > 0) os << "*z" << n_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

long cyclotomic_intersection_modulus(long m, long n) {
  if (m < 1 || n < 1) fail(errc::out_of_range, "moduli must be >= 1");
  long g = std::gcd(normalize_conductor(m), normalize_conductor(n));
  return normalize_conductor(g);
}

}  // namespace lcert
