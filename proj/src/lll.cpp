#include "lcert/lll.hpp"

#include "lcert/errors.hpp"

namespace lcert {

// Integral LLL with the lambda/d representation of the Gram-Schmidt data
// (all divisions below are exact).  Indices are 1-based to keep the
// textbook recurrences readable; d[0] = 1.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis) {
  const long n = static_cast<long>(basis.size());
  if (n <= 1) return;

  std::vector<std::vector<mpz_class>> lam(n + 1,
                                          std::vector<mpz_class>(n + 1, 0));
  std::vector<mpz_class> d(n + 1, 0);
  d[0] = 1;

  auto dot = [&](long i, long j) {
    mpz_class s = 0;
    const auto& a = basis[i - 1];
    const auto& b = basis[j - 1];
    for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
  };

  auto red = [&](long k, long l) {
    mpz_class two_lam = 2 * lam[k][l];
    if (two_lam > d[l] || two_lam < -d[l]) {
      mpz_class q, num = 2 * lam[k][l] + d[l], den = 2 * d[l];
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      for (size_t t = 0; t < basis[k - 1].size(); ++t)
        basis[k - 1][t] -= q * basis[l - 1][t];
      lam[k][l] -= q * d[l];
      for (long i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  long kmax = 1;
  d[1] = dot(1, 1);
  long k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (long j = 1; j <= k; ++j) {
        mpz_class u = dot(k, j);
        for (long i = 1; i < j; ++i)
          u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] <= 0)
        fail(errc::invariant_violation, "dependent rows in lattice basis");
    }
    while (true) {
      red(k, k - 1);
      // Lovasz test with delta = 3/4, cleared of denominators
      if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] -
                                    4 * lam[k][k - 1] * lam[k][k - 1]) {
        // swap rows k and k-1, update the GS data
        std::swap(basis[k - 1], basis[k - 2]);
        for (long j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        mpz_class l0 = lam[k][k - 1];
        mpz_class B = (d[k - 2] * d[k] + l0 * l0) / d[k - 1];
        for (long i = k + 1; i <= kmax; ++i) {
          mpz_class t = lam[i][k];
          lam[i][k] = (d[k] * lam[i][k - 1] - l0 * t) / d[k - 1];
          lam[i][k - 1] = (B * t + l0 * lam[i][k]) / d[k];
        }
        d[k - 1] = B;
        k = (k - 1 > 2) ? k - 1 : 2;
        if (k == 2) {
          // restart the inner loop at the new k
        }
        continue;
      }
      for (long l = k - 2; l >= 1; --l) red(k, l);
      ++k;
      break;
    }
  }
}

}  // namespace lcert
