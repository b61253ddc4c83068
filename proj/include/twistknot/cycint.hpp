#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "twistknot/modular.hpp"

namespace tk {

// Element of Z[zeta_q] on the power basis 1, zeta, ..., zeta^(q-2), where
// zeta^(q-1) = -(1 + zeta + ... + zeta^(q-2)).
//
// An element built from a plain integer carries no modulus (modulus() == 0)
// and is promoted on first contact with a bound element. This is what lets
// generic code (Eigen included) write Scalar(0) and Scalar(1).
class CycInt {
 public:
  CycInt() : c_(1) {}
  CycInt(long v) : c_{mpz_class(v)} {}  // NOLINT: integers embed implicitly
  CycInt(const mpz_class& v) : c_{v} {}  // NOLINT
  CycInt(int q, std::vector<mpz_class> coeffs);

  static CycInt zero(int q);
  static CycInt one(int q);
  static CycInt zeta(int q, long k = 1);
  // Element from coefficients on zeta^0..zeta^(q-1) (redundant basis).
  static CycInt from_redundant(int q, const std::vector<mpz_class>& b);

  int modulus() const { return q_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  std::vector<mpz_class> redundant() const;  // length q, last entry 0
  CycInt bound(int q) const;

  bool is_zero() const;
  bool is_rational() const;
  mpz_class rational_value() const;  // valid when is_rational()
  bool lex_negative() const;         // first nonzero coefficient is negative
  bool is_real() const { return *this == conjugate(); }

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt& a, const CycInt& b);
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
  friend bool operator<(const CycInt& a, const CycInt& b);

  CycInt conjugate() const;   // zeta -> zeta^-1
  CycInt galois(long e) const;  // zeta -> zeta^e, gcd(e, q) = 1
  mpz_class norm() const;       // product of all Galois conjugates
  mpz_class content() const;    // gcd of coefficients (nonnegative)
  CycInt divide_exact(const CycInt& d) const;  // throws NonExactDivision
  CycInt divide_exact(const mpz_class& d) const;

  // Image under zeta -> b in Z/r, b of order q.
  u64 reduce(u64 r, u64 b) const;
  std::complex<long double> embed(long j = 1) const;  // zeta -> exp(2 pi i j / q)
  long double abs_l1() const;                          // sum of |coefficients|

  std::string str() const;

 private:
  int q_ = 0;
  std::vector<mpz_class> c_;
};

int common_modulus(const CycInt& a, const CycInt& b);

}  // namespace tk
