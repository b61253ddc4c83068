#include "twistknot/cycint.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

int common_modulus(const CycInt& a, const CycInt& b) {
  if (a.modulus() && b.modulus() && a.modulus() != b.modulus())
    throw DomainError("mixing cyclotomic rings of different order");
  return a.modulus() ? a.modulus() : b.modulus();
}

CycInt::CycInt(int q, std::vector<mpz_class> coeffs) : q_(q), c_(std::move(coeffs)) {
  if (q < 2 || !is_prime(static_cast<u64>(q))) throw DomainError("cyclotomic order must be prime");
  if (c_.size() != static_cast<std::size_t>(q - 1))
    throw DomainError("power basis needs exactly q-1 coefficients");
}

CycInt CycInt::zero(int q) { return CycInt(q, std::vector<mpz_class>(q - 1)); }

CycInt CycInt::one(int q) {
  CycInt r = zero(q);
  r.c_[0] = 1;
  return r;
}

CycInt CycInt::zeta(int q, long k) {
  std::vector<mpz_class> b(q);
  b[((k % q) + q) % q] = 1;
  return from_redundant(q, b);
}

CycInt CycInt::from_redundant(int q, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(q - 1);
  for (int i = 0; i < q - 1; ++i) c[i] = b[i] - b[q - 1];
  return CycInt(q, std::move(c));
}

std::vector<mpz_class> CycInt::redundant() const {
  std::vector<mpz_class> b(c_);
  b.resize(q_ ? q_ : 1);
  return b;
}

CycInt CycInt::bound(int q) const {
  if (q_ == q) return *this;
  if (q_ != 0) throw DomainError("element already bound to another cyclotomic order");
  CycInt r = zero(q);
  r.c_[0] = c_[0];
  return r;
}

bool CycInt::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpz_class CycInt::rational_value() const { return c_[0]; }

bool CycInt::lex_negative() const {
  for (auto& c : c_)
    if (c != 0) return c < 0;
  return false;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  int q = common_modulus(*this, o);
  if (q && !q_) *this = bound(q);
  if (o.q_ == q_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    c_[0] += o.c_[0];
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  int q = common_modulus(*this, o);
  if (q && !q_) *this = bound(q);
  if (o.q_ == q_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else {
    c_[0] -= o.c_[0];
  }
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  int q = common_modulus(a, b);
  if (a.q_ == 0 || b.q_ == 0) {
    const CycInt& s = a.q_ == 0 ? a : b;
    CycInt r = a.q_ == 0 ? b : a;
    for (auto& c : r.c_) c *= s.c_[0];
    return r;
  }
  std::vector<mpz_class> acc(q);
  mpz_class t;
  for (int i = 0; i < q - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < q - 1; ++j) {
      if (b.c_[j] == 0) continue;
      int k = i + j;
      if (k >= q) k -= q;
      mpz_addmul(acc[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return CycInt::from_redundant(q, acc);
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.q_ == b.q_) return a.c_ == b.c_;
  const CycInt& s = a.q_ == 0 ? a : b;
  const CycInt& l = a.q_ == 0 ? b : a;
  if (s.q_ != 0) return false;
  return l.is_rational() && l.c_[0] == s.c_[0];
}

bool operator<(const CycInt& a, const CycInt& b) {
  int q = common_modulus(a, b);
  const auto ac = q ? a.bound(q).c_ : a.c_;
  const auto bc = q ? b.bound(q).c_ : b.c_;
  return ac < bc;
}

CycInt CycInt::conjugate() const { return galois(-1); }

CycInt CycInt::galois(long e) const {
  if (q_ == 0) return *this;
  if (e % q_ == 0) throw DomainError("Galois exponent must be prime to q");
  auto b = redundant();
  std::vector<mpz_class> out(q_);
  for (int k = 0; k < q_; ++k) {
    long t = (static_cast<long>(k) * e) % q_;
    if (t < 0) t += q_;
    out[t] = b[k];
  }
  return from_redundant(q_, out);
}

mpz_class CycInt::norm() const {
  if (q_ == 0 || q_ == 2) return c_[0];
  CycInt p = *this;
  for (int e = 2; e < q_; ++e) p = p * galois(e);
  return p.c_[0];
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (auto& c : c_) g = gcd(g, c);
  return g;
}

CycInt CycInt::divide_exact(const mpz_class& d) const {
  if (d == 0) throw NonExactDivision("division by zero");
  CycInt r = *this;
  for (auto& c : r.c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw NonExactDivision("cyclotomic coefficient not divisible");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

CycInt CycInt::divide_exact(const CycInt& d) const {
  if (d.is_zero()) throw NonExactDivision("division by zero");
  int q = common_modulus(*this, d);
  if (d.is_rational()) return divide_exact(d.c_[0]);
  // a / d = a * prod_{e != 1} sigma_e(d) / N(d)
  CycInt num = q_ ? *this : bound(q);
  CycInt dd = d.bound(q);
  for (int e = 2; e < q; ++e) num = num * dd.galois(e);
  return num.divide_exact(dd.norm());
}

u64 CycInt::reduce(u64 r, u64 b) const {
  u64 acc = 0, pw = 1;
  for (auto& c : c_) {
    mpz_class m = c % static_cast<unsigned long>(r);
    long v = m.get_si();
    if (v < 0) v += static_cast<long>(r);
    acc = add_mod(acc, mul_mod(static_cast<u64>(v), pw, r), r);
    pw = mul_mod(pw, b, r);
  }
  return acc;
}

std::complex<long double> CycInt::embed(long j) const {
  if (q_ == 0) return {c_[0].get_d(), 0.0L};
  std::complex<long double> acc = 0;
  for (int k = 0; k < q_ - 1; ++k) {
    if (c_[k] == 0) continue;
    long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % q_) / q_;
    acc += static_cast<long double>(c_[k].get_d()) * std::polar(1.0L, ang);
  }
  return acc;
}

long double CycInt::abs_l1() const {
  long double s = 0;
  for (auto& c : c_) s += std::fabs(static_cast<long double>(c.get_d()));
  return s;
}

std::string CycInt::str() const {
  if (q_ <= 2) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int k = q_ - 2; k >= 0; --k) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    mpz_class a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << 'z';
    if (k >= 2) os << '^' << k;
  }
  return first ? "0" : os.str();
}

}  // namespace tk
