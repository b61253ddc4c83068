#pragma once

#include "twistknot/eigen_support.hpp"

namespace tk {

struct DeterminantStats {
  long degree_bound = 0;     // evaluation points used: degree_bound + 1
  double coefficient_bits = 0;
  int primes = 0;
};

// Exact determinant of a square matrix over Z[zeta_q][t^+-1] (q = 0 or 2 for
// integer entries). Rows are shifted to polynomials, the determinant is
// evaluated at every primitive q-th root and enough t-points modulo several
// word-size primes r = 1 mod q, interpolated, pulled back to the power basis
// and lifted by CRT past a Hadamard bound. One extra prime checks the result.
LaurentCyc exact_determinant(const LaurentMatrix& m, int q, DeterminantStats* stats = nullptr);

}  // namespace tk
