#include "twistknot/equivariant.hpp"

#include <algorithm>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

std::vector<MetabelianRep> solve_equivariant(const Presentation& p, const ModuleRing& R) {
  const int n = R.n();
  const u64 q = R.q();
  const int base = p.base_index();
  std::vector<int> col_of(p.n, -1);
  int unknowns = 0;
  for (int g = 0; g < p.n; ++g)
    if (g != base) col_of[g] = unknowns++;
  MatrixFq sys = MatrixFq::Zero(static_cast<Eigen::Index>(p.relators.size()) * n, unknowns * n);
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    // track the R_f-coefficient of each v_g in the v-component of the running product
    std::vector<ModElem> coef(p.n, R.zero());
    long j = 0;
    for (const auto& l : p.relators[k]) {
      if (l.exp > 0) {
        ModElem xinv = R.x_pow(-1);
        for (auto& c : coef) c = R.mul(xinv, c);
        coef[l.gen] = R.add(coef[l.gen], R.one());
        ++j;
      } else {
        ModElem x = R.x_pow(1);
        for (auto& c : coef) c = R.mul(x, c);
        coef[l.gen] = R.sub(coef[l.gen], x);
        --j;
      }
    }
    if (j != 0) throw DomainError("relator with nonzero exponent sum");
    for (int g = 0; g < p.n; ++g) {
      if (g == base) continue;
      MatrixFq m = R.mult_matrix(coef[g]);
      sys.block(static_cast<Eigen::Index>(k) * n, col_of[g] * n, n, n) = m;
    }
  }
  MatrixFq ns = nullspace_mod(sys, q);
  int max_label = 0;
  for (int g = 0; g < p.n; ++g) max_label = std::max(max_label, p.labels.empty() ? g : p.labels[g]);
  std::vector<MetabelianRep> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    MetabelianRep rep;
    rep.ring = R;
    rep.v.assign(max_label + 1, R.zero());
    rep.base = p.labels.empty() ? base : p.labels[base];
    for (int g = 0; g < p.n; ++g) {
      if (g == base) continue;
      ModElem v(n);
      for (int i = 0; i < n; ++i) v[i] = ns(col_of[g] * n + i, c);
      rep.v[p.labels.empty() ? g : p.labels[g]] = v;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

MetabelianRep combine(const std::vector<MetabelianRep>& basis, const std::vector<ModElem>& coeffs) {
  if (basis.empty() || basis.size() != coeffs.size()) throw DomainError("combine: size mismatch");
  MetabelianRep r = basis[0];
  const ModuleRing& R = r.ring;
  for (auto& v : r.v) v = R.zero();
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = R.add(r.v[i], R.mul(coeffs[k], basis[k].v[i]));
  return r;
}

int ModuleDecomposition::dimension() const {
  int d = 0;
  for (auto& pc : pieces) d += pc.multiplicity * pc.ring.n();
  return d;
}

std::string ModuleDecomposition::str() const {
  if (pieces.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) os << " + ";
    os << pieces[i].ring.label();
    if (pieces[i].multiplicity > 1) os << '^' << pieces[i].multiplicity;
  }
  return os.str();
}

ModuleDecomposition decompose_branched_homology(const Presentation& pres, u64 p, u64 q) {
  ModuleDecomposition d;
  d.p = p;
  d.q = q;
  auto fs = cyclotomic_factors(p, q);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    ModuleRing R(p, fs[i]);
    auto basis = solve_equivariant(pres, R);
    if (basis.empty()) continue;
    if (basis.size() % static_cast<std::size_t>(R.n()) != 0)
      throw DomainError("solution space dimension is not a multiple of deg f");
    d.pieces.push_back({R, static_cast<int>(basis.size()) / R.n(), std::move(basis)});
  }
  return d;
}

mpz_class branched_homology_order(const LaurentCyc& alexander, u64 p) {
  if (!is_prime(p)) throw DomainError("cover degree must be prime");
  const int pi = static_cast<int>(p);
  CycInt v = CycInt::zero(pi);
  for (std::size_t k = 0; k < alexander.coeffs().size(); ++k) {
    long e = alexander.low() + static_cast<long>(k);
    if (!alexander.coeffs()[k].is_rational()) throw DomainError("Alexander polynomial must have integer coefficients");
    v += alexander.coeffs()[k] * CycInt::zeta(pi, e);
  }
  mpz_class n = v.norm();
  return abs(n);
}

}  // namespace tk
