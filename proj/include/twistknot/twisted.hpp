#pragma once

#include "twistknot/determinant.hpp"
#include "twistknot/induced.hpp"

namespace tk {

struct TwistedOptions {
  bool simplify_presentation = true;  // Tietze-reduce before building the Fox matrix
};

// Delta = det(Phi(reduced Fox matrix)) / det(rho~(x_base) - I) * (1 - t)^s,
// s = 1 exactly when chi is trivial. Returned normalized.
// Throws DomainError when the twisted module is not torsion (determinant 0).
LaurentCyc twisted_alexander(const Presentation& p, const MetabelianRep& rho, const Character& chi,
                             const TwistedOptions& opt = {});

// Delta / (1 - t)^e with e = 0 for the trivial character and 1 otherwise, normalized.
LaurentCyc reduced_twisted(const LaurentCyc& delta, const Character& chi);

// Same quotient as twisted_alexander for arbitrary monomial generator images.
LaurentCyc order_from_images(const Presentation& p, const std::vector<MonomialMatrix>& images, bool trivial_character,
                             const TwistedOptions& opt = {});

// Classical Alexander polynomial, lowest exponent 0 and positive leading coefficient.
LaurentCyc alexander_polynomial(const Presentation& p, const TwistedOptions& opt = {});

// Alexander polynomial of the p-fold cyclic cover X_p (trivial character twisted polynomial).
LaurentCyc cover_alexander(const Presentation& pres, int p, const TwistedOptions& opt = {});

// prod_{i=0}^{p-1} Delta_K(zeta_p^i t^(1/p)) equals the cover polynomial up to a unit.
bool corpoly_product_check(const LaurentCyc& alexander, const LaurentCyc& cover, int p);

// Positive-leading, lowest-exponent-0 representative of an integer polynomial.
LaurentCyc integer_normalize(const LaurentCyc& d);

}  // namespace tk
