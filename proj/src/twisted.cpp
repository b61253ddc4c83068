#include "twistknot/twisted.hpp"

#include "twistknot/error.hpp"

namespace tk {

LaurentCyc order_from_images(const Presentation& p, const std::vector<MonomialMatrix>& images, bool trivial_character,
                             const TwistedOptions& opt) {
  const int q = images.at(0).q;
  Presentation work = opt.simplify_presentation ? simplify(p) : p;
  std::vector<MonomialMatrix> imgs;
  for (int g = 0; g < work.n; ++g) {
    // simplified generators keep their position among the original ones through labels
    int orig = -1;
    for (int h = 0; h < p.n; ++h)
      if ((p.labels.empty() ? h : p.labels[h]) == work.labels[g]) orig = h;
    imgs.push_back(images.at(orig));
  }
  LaurentMatrix f = substituted_reduced_fox(work, imgs);
  LaurentCyc num = exact_determinant(f, q);
  if (num.is_zero()) throw DomainError("twisted Alexander module is not torsion (determinant vanishes)");
  const MonomialMatrix& base = imgs.at(work.base_index());
  LaurentMatrix b = base.dense();
  for (int i = 0; i < base.p; ++i) b(i, i) -= LaurentCyc(1L);
  LaurentCyc den = exact_determinant(b, q);
  if (trivial_character) num = num * LaurentCyc::from_integers({1, -1});
  return laurent_normalize(laurent_divide_exact(num, den));
}

LaurentCyc twisted_alexander(const Presentation& p, const MetabelianRep& rho, const Character& chi,
                             const TwistedOptions& opt) {
  return order_from_images(p, generator_images(p, rho, chi), chi.is_trivial(), opt);
}

LaurentCyc reduced_twisted(const LaurentCyc& delta, const Character& chi) {
  if (chi.is_trivial()) return laurent_normalize(delta);
  return laurent_normalize(laurent_divide_exact(delta, LaurentCyc::from_integers({1, -1})));
}

LaurentCyc integer_normalize(const LaurentCyc& d) {
  LaurentCyc r = laurent_normalize(d);
  if (!r.is_zero() && r.coeffs().back().lex_negative()) r = -r;
  return r;
}

LaurentCyc alexander_polynomial(const Presentation& p, const TwistedOptions& opt) {
  LaurentCyc d = integer_normalize(order_from_images(p, abelian_images(p, 1), true, opt));
  CycInt at1(0);
  for (auto& c : d.coeffs()) at1 += c;
  if (!(at1 == CycInt(1L) || at1 == CycInt(-1L))) throw DomainError("Alexander polynomial does not satisfy Delta(1) = +-1");
  return d;
}

LaurentCyc cover_alexander(const Presentation& pres, int p, const TwistedOptions& opt) {
  return integer_normalize(order_from_images(pres, abelian_images(pres, p), true, opt));
}

bool corpoly_product_check(const LaurentCyc& alexander, const LaurentCyc& cover, int p) {
  // prod_i Delta_K(zeta^i u) is a polynomial in u^p = t
  LaurentCyc prod(1L);
  for (int i = 0; i < p; ++i) {
    std::vector<CycInt> c(alexander.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      long e = alexander.low() + static_cast<long>(k);
      CycInt z = p == 2 ? CycInt(((i * e) % 2 == 0) ? 1L : -1L) : CycInt::zeta(p, i * e);
      c[k] = alexander.coeffs()[k] * z;
    }
    prod = prod * LaurentCyc(alexander.low(), c);
  }
  // coefficients must be rational and supported on multiples of p
  std::vector<CycInt> back;
  if (prod.low() % p != 0) return false;
  for (std::size_t k = 0; k < prod.coeffs().size(); ++k) {
    const CycInt& c = prod.coeffs()[k];
    if (!c.is_rational()) return false;
    if ((prod.low() + static_cast<long>(k)) % p != 0) {
      if (!c.is_zero()) return false;
      continue;
    }
    back.push_back(CycInt(c.rational_value()));
  }
  LaurentCyc folded(prod.low() / p, back);
  return proportional_up_to_unit(folded, cover);
}

}  // namespace tk
