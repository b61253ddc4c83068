#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "twistknot/cycint.hpp"

namespace tk {

// Laurent polynomial in t with coefficients in Z[zeta_q]:
// sum_{k} coeffs[k] t^(low + k). The zero polynomial has no coefficients.
class LaurentCyc {
 public:
  LaurentCyc() = default;
  LaurentCyc(long c) : LaurentCyc(CycInt(c)) {}  // NOLINT
  LaurentCyc(const CycInt& c, long exponent = 0);  // NOLINT
  LaurentCyc(long low, std::vector<CycInt> coeffs);

  static LaurentCyc t(long k = 1) { return LaurentCyc(CycInt(1), k); }
  // Integer Laurent polynomial from ascending coefficients.
  static LaurentCyc from_integers(const std::vector<long>& coeffs, long low = 0);
  static LaurentCyc from_mpz(const std::vector<mpz_class>& coeffs, long low = 0);

  int modulus() const;  // 0 when every coefficient is a plain integer
  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  long span() const { return c_.empty() ? -1 : high() - low_; }
  const std::vector<CycInt>& coeffs() const { return c_; }
  CycInt coeff(long e) const;
  bool is_integral() const;  // all coefficients rational integers

  LaurentCyc operator-() const;
  LaurentCyc& operator+=(const LaurentCyc& o);
  LaurentCyc& operator-=(const LaurentCyc& o);
  LaurentCyc& operator*=(const LaurentCyc& o) { return *this = *this * o; }
  friend LaurentCyc operator+(LaurentCyc a, const LaurentCyc& b) { return a += b; }
  friend LaurentCyc operator-(LaurentCyc a, const LaurentCyc& b) { return a -= b; }
  friend LaurentCyc operator*(const LaurentCyc& a, const LaurentCyc& b);
  friend bool operator==(const LaurentCyc& a, const LaurentCyc& b);
  friend bool operator!=(const LaurentCyc& a, const LaurentCyc& b) { return !(a == b); }

  LaurentCyc shifted(long k) const;
  LaurentCyc pow(unsigned e) const;
  LaurentCyc map_coeffs(long galois_exponent) const;
  LaurentCyc scaled(const CycInt& c) const;

  std::string str(char var = 't') const;

 private:
  void trim();
  long low_ = 0;
  std::vector<CycInt> c_;
};

// bar: t -> t^-1 and zeta -> zeta^-1.
LaurentCyc laurent_involution(const LaurentCyc& d);

// Canonical representative of the orbit {c t^k d : c nonzero integer}: lowest
// exponent 0, content divided out, first nonzero coordinate of the constant
// coefficient positive.
LaurentCyc laurent_normalize(const LaurentCyc& d);

// Exact quotient a / b over Z[zeta]; throws NonExactDivision on a remainder.
LaurentCyc laurent_divide_exact(const LaurentCyc& a, const LaurentCyc& b);

// Multiplicity of (t - root) for root = +-1, after which `rest` holds the cofactor.
int root_multiplicity(const LaurentCyc& d, int root, LaurentCyc* rest = nullptr);

// a = u b for a unit u = c t^k of Q(zeta)[t^+-1], c in Q(zeta)?
bool proportional_up_to_unit(const LaurentCyc& a, const LaurentCyc& b);

// Image in Z_r[t] (ascending, exponent shifted to low()) under zeta -> b.
std::vector<u64> reduce_mod(const LaurentCyc& d, u64 r, u64 b);

inline std::ostream& operator<<(std::ostream& os, const CycInt& c) { return os << c.str(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentCyc& d) { return os << d.str(); }

}  // namespace tk
