#pragma once

#include <gmpxx.h>

#include <vector>

#include "twistknot/laurent.hpp"
#include "twistknot/module.hpp"

namespace tk {

// F_q-basis of the space of representations rho(x_i) = (x, v_i) into Z x| R_f
// with v_base = 0; these correspond to equivariant maps H_1(X_p) -> R_f.
std::vector<MetabelianRep> solve_equivariant(const Presentation& p, const ModuleRing& R);

// Linear combination sum c_k basis_k, coefficients in R_f acting by multiplication.
MetabelianRep combine(const std::vector<MetabelianRep>& basis, const std::vector<ModElem>& coeffs);

struct IsotypicPiece {
  ModuleRing ring;
  int multiplicity = 0;  // H_1(B_p; Z_q)_f = R_f^multiplicity
  std::vector<MetabelianRep> basis;  // F_q-basis of the solution space
};

struct ModuleDecomposition {
  u64 p = 0, q = 0;
  std::vector<IsotypicPiece> pieces;  // only pieces with positive multiplicity
  int dimension() const;              // dim over F_q of H_1(B_p; Z_q)
  std::string str() const;
};

ModuleDecomposition decompose_branched_homology(const Presentation& pres, u64 p, u64 q);

// |H_1(B_p)| = |prod_{i=1}^{p-1} Delta(zeta_p^i)|; 0 means infinite.
mpz_class branched_homology_order(const LaurentCyc& alexander, u64 p);

}  // namespace tk
