#pragma once

#include <string>
#include <vector>

#include "twistknot/fq.hpp"
#include "twistknot/linalg_fq.hpp"
#include "twistknot/presentation.hpp"

namespace tk {

// Coefficients of 1, x, ..., x^(n-1) in R_f = F_q[x]/(f).
using ModElem = std::vector<u64>;

// R_f = F_q[Z_p]/(f) for an irreducible factor f of x^p - 1 with f != x - 1;
// x acts as the generator of Z_p.
class ModuleRing {
 public:
  ModuleRing() = default;
  ModuleRing(u64 p, const PolyFq& f);

  u64 p() const { return p_; }
  u64 q() const { return f_.modulus(); }
  const PolyFq& f() const { return f_; }
  int n() const { return f_.degree(); }

  ModElem zero() const { return ModElem(n(), 0); }
  ModElem one() const;
  ModElem x_pow(long k) const;
  ModElem from_poly(const PolyFq& g) const;
  PolyFq to_poly(const ModElem& v) const { return PolyFq(q(), v); }

  ModElem add(const ModElem& a, const ModElem& b) const;
  ModElem sub(const ModElem& a, const ModElem& b) const;
  ModElem neg(const ModElem& a) const;
  ModElem mul(const ModElem& a, const ModElem& b) const;
  ModElem scale(u64 s, const ModElem& a) const;
  bool is_zero(const ModElem& a) const;

  // Matrix of v -> c v on the basis 1, x, ..., x^(n-1).
  MatrixFq mult_matrix(const ModElem& c) const;
  std::string str(const ModElem& v) const;
  std::string label() const { return "R_{" + factor_label(f_) + "}"; }

 private:
  u64 p_ = 0;
  PolyFq f_;
};

// Z_q-valued linear functional on R_f given by its values on 1, x, ..., x^(n-1).
struct Character {
  std::vector<u64> values;
  u64 q = 0;
  u64 operator()(const ModElem& v) const;
  bool is_trivial() const;
  std::string str() const;
};

Character scaled(const Character& c, u64 s);

// (x^j, v) in Z x| R_f with (x^i, v)(x^j, w) = (x^(i+j), x^-j v + w).
struct SemidirectElem {
  long j = 0;
  ModElem v;
  friend bool operator==(const SemidirectElem&, const SemidirectElem&) = default;
};

SemidirectElem semidirect_mul(const ModuleRing& R, const SemidirectElem& a, const SemidirectElem& b);
SemidirectElem semidirect_inverse(const ModuleRing& R, const SemidirectElem& a);

// rho(x_i) = (x, v_i); v is indexed by Wirtinger generator label.
struct MetabelianRep {
  ModuleRing ring;
  std::vector<ModElem> v;
  int base = -1;

  SemidirectElem image(int label) const { return {1, v.at(label)}; }
  SemidirectElem evaluate(const Word& w, const std::vector<int>& labels) const;
  // Every relator maps to the identity.
  bool satisfies(const Presentation& p) const;
  bool is_trivial() const;
};

std::vector<Character> enumerate_characters(const ModuleRing& R, bool up_to_scalar);

}  // namespace tk
