#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistknot/modular.hpp"

namespace tk {

// Element of the prime field F_q.
struct Fq {
  u64 v = 0;
  u64 q = 0;

  Fq() = default;
  Fq(i64 value, u64 modulus) : v(to_mod(value, modulus)), q(modulus) {}

  friend Fq operator+(Fq a, Fq b) { return {static_cast<i64>(add_mod(a.v, b.v, a.q)), a.q}; }
  friend Fq operator-(Fq a, Fq b) { return {static_cast<i64>(sub_mod(a.v, b.v, a.q)), a.q}; }
  friend Fq operator*(Fq a, Fq b) { return {static_cast<i64>(mul_mod(a.v, b.v, a.q)), a.q}; }
  Fq inverse() const { return {static_cast<i64>(inv_mod(v, q)), q}; }
  friend bool operator==(Fq a, Fq b) { return a.v == b.v && a.q == b.q; }
};

// Dense univariate polynomial over F_q, ascending coefficients, no trailing zeros.
class PolyFq {
 public:
  PolyFq() = default;
  explicit PolyFq(u64 q) : q_(q) {}
  PolyFq(u64 q, std::vector<u64> coeffs);
  static PolyFq from_signed(u64 q, const std::vector<i64>& coeffs);
  static PolyFq monomial(u64 q, u64 c, std::size_t deg);
  static PolyFq x(u64 q) { return monomial(q, 1, 1); }

  u64 modulus() const { return q_; }
  const std::vector<u64>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  u64 lead() const { return c_.empty() ? 0 : c_.back(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 eval(u64 x) const;

  PolyFq monic() const;
  PolyFq derivative() const;

  friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator*(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator*(u64 s, const PolyFq& a);
  friend bool operator==(const PolyFq& a, const PolyFq& b) { return a.q_ == b.q_ && a.c_ == b.c_; }
  friend bool operator<(const PolyFq& a, const PolyFq& b);

  std::string str(char var = 'x') const;

 private:
  void trim();
  u64 q_ = 0;
  std::vector<u64> c_;
};

void divmod(const PolyFq& a, const PolyFq& b, PolyFq& quot, PolyFq& rem);
PolyFq operator%(const PolyFq& a, const PolyFq& b);
PolyFq operator/(const PolyFq& a, const PolyFq& b);
PolyFq gcd(PolyFq a, PolyFq b);  // monic
PolyFq powmod(PolyFq base, u64 e, const PolyFq& m);
bool is_irreducible(const PolyFq& f);

struct FactorPower {
  PolyFq factor;  // monic irreducible
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

// Complete factorization of a nonzero polynomial into monic irreducibles,
// sorted by (degree, coefficients). The leading coefficient is returned separately.
// Equal-degree splitting uses a fixed-seed generator so results are reproducible.
std::vector<FactorPower> factor_over_fq(const PolyFq& f, u64* leading = nullptr,
                                        std::uint64_t seed = 0x5eed);

// Multiset of irreducible-factor degrees, one entry per factor with multiplicity.
std::vector<int> factor_degrees(const std::vector<FactorPower>& fs);

// Irreducible factors of x^p - 1 over F_q, with x - 1 first.
std::vector<PolyFq> cyclotomic_factors(u64 p, u64 q);

// Human label for a factor: linear ones as "x-a" with a the root, others via str().
std::string factor_label(const PolyFq& f);

}  // namespace tk
