#include "lcert/characters.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lcert/errors.hpp"
#include "lcert/nt.hpp"

namespace lcert {

namespace {

// CRT lift: x == r mod pk, x == 1 mod q/pk
long crt_lift(long r, long pk, long q) {
  long rest = q / pk;
  if (rest == 1) return r % q;
  long inv = inv_mod(pk % rest, rest);
  // x = r + pk * t, t chosen so x == 1 mod rest
  long t = ((1 - r) % rest + rest) % rest * inv % rest;
  return (r + pk * t) % q;
}

// baby-step giant-step: smallest x in [0, n) with g^x == b mod m
long bsgs(long g, long b, long n, long m) {
  long step = 1;
  while (step * step < n) ++step;
  std::unordered_map<long, long> baby;
  long cur = 1 % m;
  for (long j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = cur * g % m;
  }
  long giant = inv_mod(pow_mod(g, step, m), m);
  long y = b % m;
  for (long i = 0; i < step + 1; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) {
      long x = i * step + it->second;
      if (x < n) return x;
    }
    y = y * giant % m;
  }
  fail(errc::invariant_violation, "discrete log not found");
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long q) : q_(q) {
  if (q <= 1) fail(errc::out_of_range, "modulus must be > 1");
  phi_ = euler_phi(q);
  expo_ = 1;
  for (auto [p, e] : factorize(q)) {
    long pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    Factor fac;
    fac.pk = pk;
    if (p == 2) {
      if (e >= 2) {
        fac.gi.push_back(gens_.size());
        fac.local.push_back(pk - 1);
        gens_.push_back({crt_lift(pk - 1, pk, q), 2});
      }
      if (e >= 3) {
        fac.gi.push_back(gens_.size());
        fac.local.push_back(5);
        gens_.push_back({crt_lift(5 % pk, pk, q), pk / 4});
      }
    } else {
      long g = primitive_root(p, e);
      fac.gi.push_back(gens_.size());
      fac.local.push_back(g);
      gens_.push_back({crt_lift(g, pk, q), pk - pk / p});
    }
    factors_.push_back(std::move(fac));
  }
  for (const auto& g : gens_) expo_ = std::lcm(expo_, g.order);
}

std::vector<long> UnitGroupStructure::dlog(long a) const {
  long r = ((a % q_) + q_) % q_;
  if (std::gcd(r, q_) != 1) fail(errc::not_coprime, "dlog of non-unit");
  std::vector<long> e(gens_.size(), 0);
  for (const auto& fac : factors_) {
    long b = r % fac.pk;
    if (fac.gi.empty()) continue;
    if (fac.pk % 2 == 0 && fac.pk >= 8) {
      // b = (-1)^s * 5^t mod 2^k; 5^t == 1 mod 4
      long s = (b % 4 == 3) ? 1 : 0;
      long bb = s ? (fac.pk - b) % fac.pk : b;
      e[fac.gi[0]] = s;
      e[fac.gi[1]] = bsgs(5 % fac.pk, bb, fac.pk / 4, fac.pk);
    } else if (fac.pk == 4) {
      e[fac.gi[0]] = (b == 3) ? 1 : 0;
    } else {
      e[fac.gi[0]] =
          bsgs(fac.local[0], b, gens_[fac.gi[0]].order, fac.pk);
    }
  }
  return e;
}

DirichletCharacter::DirichletCharacter(
    std::shared_ptr<const UnitGroupStructure> g, std::vector<long> exps)
    : g_(std::move(g)), e_(std::move(exps)) {
  const auto& gens = g_->generators();
  if (e_.size() != gens.size())
    fail(errc::out_of_range, "exponent vector length");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < 0 || e_[i] >= gens[i].order)
      fail(errc::out_of_range, "exponent out of range");
  if (g_->modulus() <= 2) {
    even_ = true;
  } else {
    long m = g_->exponent();
    auto d = g_->dlog(g_->modulus() - 1);
    long t = 0;
    for (size_t i = 0; i < e_.size(); ++i)
      t = (t + e_[i] * (m / gens[i].order) % m * (d[i] % m)) % m;
    // chi(-1) = zeta_m^t is +-1, so t is 0 or m/2
    even_ = (t % m == 0);
  }
}

bool DirichletCharacter::is_trivial() const {
  return std::all_of(e_.begin(), e_.end(), [](long x) { return x == 0; });
}

long DirichletCharacter::order() const {
  long d = 1;
  const auto& gens = g_->generators();
  for (size_t i = 0; i < e_.size(); ++i)
    d = std::lcm(d, gens[i].order / std::gcd(e_[i], gens[i].order));
  return d;
}

long DirichletCharacter::value_exponent(long a) const {
  long m = g_->exponent();
  auto d = g_->dlog(a);
  const auto& gens = g_->generators();
  long t = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    t = (t + e_[i] * (m / gens[i].order) % m * (d[i] % m)) % m;
  return t;
}

CycloElt DirichletCharacter::value(long a) const {
  long r = ((a % modulus()) + modulus()) % modulus();
  if (std::gcd(r, modulus()) != 1) return CycloElt::integer(0);
  return CycloElt::zeta_power(g_->exponent(), value_exponent(a));
}

DirichletCharacter DirichletCharacter::conj_character() const {
  std::vector<long> e(e_.size());
  const auto& gens = g_->generators();
  for (size_t i = 0; i < e_.size(); ++i)
    e[i] = (gens[i].order - e_[i]) % gens[i].order;
  return DirichletCharacter(g_, std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(long q) {
  auto g = std::make_shared<const UnitGroupStructure>(q);
  const auto& gens = g->generators();
  std::vector<DirichletCharacter> out;
  out.reserve(g->order());
  std::vector<long> e(gens.size(), 0);
  while (true) {
    out.emplace_back(g, e);
    size_t i = 0;
    while (i < e.size()) {
      if (++e[i] < gens[i].order) break;
      e[i++] = 0;
    }
    if (i == e.size()) break;
    if (e.empty()) break;
  }
  if (out.size() != static_cast<size_t>(g->order()))
    fail(errc::invariant_violation, "character count != phi(q)");
  return out;
}

PeriodicFunction::PeriodicFunction(long q, std::vector<CycloElt> values)
    : q_(q), v_(std::move(values)) {
  if (q < 1 || v_.size() != static_cast<size_t>(q))
    fail(errc::out_of_range, "value vector length != period");
  sum_ = CycloElt::integer(0);
  for (const auto& x : v_) sum_ = sum_ + x;
  dirichlet_type_ = true;
  for (long a = 1; a <= q_; ++a)
    if (std::gcd(a, q_) != 1 && !v_[a - 1].is_zero()) {
      dirichlet_type_ = false;
      break;
    }
  erdosian_ = v_[q_ - 1].is_zero();
  for (long a = 1; a < q_ && erdosian_; ++a) {
    const CycloElt& x = v_[a - 1];
    if (!(x == CycloElt::integer(1) || x == CycloElt::integer(-1)))
      erdosian_ = false;
  }
}

PeriodicFunction PeriodicFunction::from_character(
    const DirichletCharacter& chi) {
  long q = chi.modulus();
  std::vector<CycloElt> v(q);
  for (long a = 1; a <= q; ++a) v[a - 1] = chi.value(a);
  return PeriodicFunction(q, std::move(v));
}

PeriodicFunction PeriodicFunction::from_signs(long p,
                                              const std::vector<int>& signs) {
  if (signs.size() != static_cast<size_t>(p) - 1)
    fail(errc::out_of_range, "need p - 1 signs");
  std::vector<CycloElt> v(p);
  for (long a = 1; a < p; ++a) {
    if (signs[a - 1] != 1 && signs[a - 1] != -1)
      fail(errc::out_of_range, "signs must be +-1");
    v[a - 1] = CycloElt::integer(signs[a - 1]);
  }
  v[p - 1] = CycloElt::integer(0);
  return PeriodicFunction(p, std::move(v));
}

PeriodicFunction PeriodicFunction::zero(long q) {
  return PeriodicFunction(q, std::vector<CycloElt>(q, CycloElt::integer(0)));
}

const CycloElt& PeriodicFunction::value(long n) const {
  if (n < 1) fail(errc::out_of_range, "argument must be >= 1");
  return v_[(n - 1) % q_];
}

bool PeriodicFunction::is_odd_function() const {
  for (long a = 1; a < q_; ++a)
    if (!(v_[q_ - a - 1] == -v_[a - 1])) return false;
  return v_[q_ - 1].is_zero();
}

bool PeriodicFunction::is_even_function() const {
  for (long a = 1; a < q_; ++a)
    if (!(v_[q_ - a - 1] == v_[a - 1])) return false;
  return true;
}

PeriodicFunction operator+(const PeriodicFunction& a,
                           const PeriodicFunction& b) {
  if (a.q_ != b.q_) fail(errc::out_of_range, "period mismatch");
  std::vector<CycloElt> v(a.q_);
  for (long i = 0; i < a.q_; ++i) v[i] = a.v_[i] + b.v_[i];
  return PeriodicFunction(a.q_, std::move(v));
}

PeriodicFunction operator-(const PeriodicFunction& a,
                           const PeriodicFunction& b) {
  return a + b * mpq_class(-1);
}

PeriodicFunction operator*(const PeriodicFunction& a, const mpq_class& s) {
  std::vector<CycloElt> v(a.q_);
  for (long i = 0; i < a.q_; ++i) v[i] = a.v_[i] * s;
  return PeriodicFunction(a.q_, std::move(v));
}

bool operator==(const PeriodicFunction& a, const PeriodicFunction& b) {
  if (a.q_ != b.q_) return false;
  for (long i = 0; i < a.q_; ++i)
    if (!(a.v_[i] == b.v_[i])) return false;
  return true;
}

std::pair<PeriodicFunction, PeriodicFunction> decompose_parity(
    const PeriodicFunction& f) {
  long q = f.period();
  std::vector<CycloElt> e(q), o(q);
  mpq_class half(1, 2);
  for (long a = 1; a <= q; ++a) {
    // f(-a) = f(q - a); a = q maps to itself
    const CycloElt& fa = f.values()[a - 1];
    const CycloElt& fma = f.values()[(q - a % q) % q == 0 ? q - 1 : (q - a) - 1];
    e[a - 1] = (fa + fma) * half;
    o[a - 1] = (fa - fma) * half;
  }
  return {PeriodicFunction(q, std::move(e)), PeriodicFunction(q, std::move(o))};
}

std::vector<CycloElt> character_expansion(const PeriodicFunction& f) {
  if (!f.dirichlet_type())
    fail(errc::not_dirichlet_type, "character expansion needs f(a)=0 off units");
  long q = f.period();
  auto chars = enumerate_characters(q);
  mpq_class inv_phi(1, euler_phi(q));
  std::vector<CycloElt> coeffs;
  coeffs.reserve(chars.size());
  for (const auto& chi : chars) {
    CycloElt c = CycloElt::integer(0);
    for (long a : coprime_residues(q))
      c = c + f.value(a) * chi.value(a).conj();
    coeffs.push_back(c * inv_phi);
  }
  return coeffs;
}

std::vector<PeriodicFunction> erdos_enumerate(long p, bool exclude_odd) {
  if (p < 3 || !is_prime(p)) fail(errc::out_of_range, "p must be an odd prime");
  if (p > 31) fail(errc::too_large, "sign patterns exceed guard");
  std::vector<PeriodicFunction> out;
  long n = p - 1;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> signs(n);
    for (long i = 0; i < n; ++i) signs[i] = (mask >> i & 1) ? -1 : 1;
    PeriodicFunction f = PeriodicFunction::from_signs(p, signs);
    if (exclude_odd && f.is_odd_function()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace lcert
