#include "lcert/nt.hpp"

#include <cmath>

#include "lcert/errors.hpp"

namespace lcert {

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

long euler_phi(long n) {
  long r = 1;
  for (auto [p, e] : factorize(n)) {
    long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    r *= pe * (p - 1);
  }
  return n >= 1 ? r : 0;
}

long pow_mod(long base, long exp, long mod) {
  base %= mod;
  if (base < 0) base += mod;
  long r = 1 % mod;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long>((__int128)r * base % mod);
    base = static_cast<long>((__int128)base * base % mod);
    exp >>= 1;
  }
  return r;
}

long inv_mod(long a, long mod) {
  a %= mod;
  if (a < 0) a += mod;
  long g = std::gcd(a, mod);
  if (g != 1) fail(errc::not_coprime, "no inverse mod " + std::to_string(mod));
  // extended Euclid
  long r0 = mod, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  long inv = s0 % mod;
  if (inv < 0) inv += mod;
  return inv;
}

long multiplicative_order(long a, long mod) {
  a %= mod;
  if (a < 0) a += mod;
  if (std::gcd(a, mod) != 1)
    fail(errc::not_coprime, "order undefined mod " + std::to_string(mod));
  long phi = euler_phi(mod);
  long ord = phi;
  for (auto [p, e] : factorize(phi)) {
    (void)e;
    while (ord % p == 0 && pow_mod(a, ord / p, mod) == 1) ord /= p;
  }
  return ord;
}

long primitive_root(long p, int e) {
  long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  long phi = euler_phi(pe);
  for (long g = 2; g < pe; ++g) {
    if (std::gcd(g, pe) != 1) continue;
    if (multiplicative_order(g, pe) == phi) return g;
  }
  fail(errc::invariant_violation, "no primitive root mod " + std::to_string(pe));
}

std::vector<long> coprime_residues(long n) {
  std::vector<long> out;
  for (long a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  if (n == 1) out.push_back(0);  // unit group of Z/1 is trivial
  return out;
}

}  // namespace lcert
