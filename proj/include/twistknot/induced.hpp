#pragma once

#include <vector>

#include "twistknot/eigen_support.hpp"
#include "twistknot/fox.hpp"
#include "twistknot/module.hpp"

namespace tk {

// p x p matrix with one nonzero entry zeta^z t^e per row, in column col[i].
struct MonomialMatrix {
  int p = 0;
  int q = 2;
  std::vector<int> col;
  std::vector<int> z;
  std::vector<long> e;

  static MonomialMatrix identity(int p, int q);
  MonomialMatrix inverse() const;
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
  LaurentMatrix dense() const;
};

// rho~(x^j, v) = A^j diag(zeta^chi(v), zeta^chi(x v), ..., zeta^chi(x^(p-1) v)),
// A the p x p matrix with ones on the superdiagonal and t in the bottom-left corner.
MonomialMatrix induced_monomial(long j, const ModElem& v, const Character& chi, const ModuleRing& R);
LaurentMatrix induced_matrix(long j, const ModElem& v, const Character& chi, const ModuleRing& R);

// Images of the generators of p: x_g -> rho~(x, v_{label(g)}).
std::vector<MonomialMatrix> generator_images(const Presentation& p, const MetabelianRep& rho, const Character& chi);
// Every generator -> A (cover representation, p x p) or (t) for p = 1.
std::vector<MonomialMatrix> abelian_images(const Presentation& pres, int p);

// Fox matrix with every group ring entry replaced by its image: rows x cols blocks of p x p.
LaurentMatrix substitute(const FoxMatrix& fox, const std::vector<MonomialMatrix>& images);

// Same result computed straight from the relators of `pres`, dropping the last
// relator and the base column; avoids materialising the group ring entries.
LaurentMatrix substituted_reduced_fox(const Presentation& pres, const std::vector<MonomialMatrix>& images);

}  // namespace tk
