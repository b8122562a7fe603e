// Compares the OpenMP kernels against their serial reference paths.

#include <chrono>
#include <cstdio>

#include "lcert/harness.hpp"
#include "lcert/units.hpp"

using namespace lcert;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void bench_embedding(long bits) {
  std::vector<RamachandraUnit> units;
  for (long q : {5L, 7L, 11L, 13L})
    for (const auto& u : ramachandra_units(q)) units.push_back(u);
  PrecisionContext ctx(bits);

  auto t0 = std::chrono::steady_clock::now();
  RealMatrix serial = log_embedding_matrix(units, ctx, false);
  double ts = seconds(t0);

  t0 = std::chrono::steady_clock::now();
  RealMatrix parallel = log_embedding_matrix(units, ctx, true);
  double tp = seconds(t0);

  bool same = true;
  for (size_t i = 0; i < serial.size(); ++i)
    for (size_t j = 0; j < serial[i].size(); ++j)
      same = same && mpfr_equal_p(serial[i][j].raw(), parallel[i][j].raw());

  std::printf("embedding matrix %zux%zu @ %ld bits: serial %.3fs, "
              "parallel %.3fs (x%.2f), identical=%s\n",
              serial.size(), serial.empty() ? 0 : serial[0].size(), bits, ts,
              tp, ts / tp, same ? "yes" : "NO");
}

void bench_scan(long p) {
  mpz_class B = mpz_class(1) << 16;
  EscalationPolicy esc{512, 1024};

  auto t0 = std::chrono::steady_clock::now();
  auto ser = erdos_survey({p}, B, esc, false);
  double ts = seconds(t0);

  t0 = std::chrono::steady_clock::now();
  auto par = erdos_survey({p}, B, esc, true);
  double tp = seconds(t0);

  std::printf("sign-pattern scan p=%ld (%ld functions): serial %.3fs, "
              "parallel %.3fs (x%.2f), verdicts %s/%s\n",
              p, (1L << (p - 1)) - (1L << ((p - 1) / 2)), ts, tp, ts / tp,
              verdict_name(ser.verdict), verdict_name(par.verdict));
}

}  // namespace

int main() {
  bench_embedding(512);
  bench_embedding(1024);
  bench_scan(11);
  bench_scan(13);
  return 0;
}
