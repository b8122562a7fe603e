#pragma once

// Small elementary number theory helpers shared across modules.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace lcert {

std::vector<std::pair<long, int>> factorize(long n);
bool is_prime(long n);
long euler_phi(long n);
long pow_mod(long base, long exp, long mod);
long inv_mod(long a, long mod);  // throws not_coprime if gcd(a, mod) != 1
long multiplicative_order(long a, long mod);

/// Smallest primitive root of p^e (p odd prime).
long primitive_root(long p, int e);

/// Conductor normalization: n with n == 2 (mod 4) is replaced by n/2.
inline long normalize_conductor(long n) {
  return (n > 1 && n % 4 == 2) ? n / 2 : n;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }
inline long lcm_long(long a, long b) { return std::lcm(a, b); }

/// Residues 1 <= a < n coprime to n.
std::vector<long> coprime_residues(long n);

}  // namespace lcert
