#pragma once

// Thin loop-parallelism shim: OpenMP when available, serial otherwise.
// The serial path is also exposed directly so results can be compared
// against the parallel kernels in tests and benchmarks.

namespace lcert {

template <typename F>
void serial_for(long n, F&& body) {
  for (long i = 0; i < n; ++i) body(i);
}

template <typename F>
void parallel_for(long n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) body(i);
#else
  serial_for(n, body);
#endif
}

}  // namespace lcert
