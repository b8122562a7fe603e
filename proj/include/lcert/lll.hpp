#pragma once

// Exact-integer LLL lattice basis reduction (delta = 3/4), operating on
// row vectors.  Deterministic: fixed parameters, no floating point.

#include <gmpxx.h>

#include <vector>

namespace lcert {

/// Reduce the rows of basis in place.  Rows must be linearly independent.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis);

}  // namespace lcert
