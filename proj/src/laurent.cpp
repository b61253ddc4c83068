#include "twistknot/laurent.hpp"

#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

LaurentCyc::LaurentCyc(const CycInt& c, long exponent) : low_(exponent), c_{c} { trim(); }

LaurentCyc::LaurentCyc(long low, std::vector<CycInt> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

LaurentCyc LaurentCyc::from_integers(const std::vector<long>& coeffs, long low) {
  std::vector<CycInt> c(coeffs.begin(), coeffs.end());
  return LaurentCyc(low, std::move(c));
}

LaurentCyc LaurentCyc::from_mpz(const std::vector<mpz_class>& coeffs, long low) {
  std::vector<CycInt> c(coeffs.begin(), coeffs.end());
  return LaurentCyc(low, std::move(c));
}

void LaurentCyc::trim() {
  std::size_t lo = 0;
  while (lo < c_.size() && c_[lo].is_zero()) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t hi = c_.size();
  while (c_[hi - 1].is_zero()) --hi;
  if (lo > 0 || hi < c_.size()) {
    c_ = std::vector<CycInt>(c_.begin() + lo, c_.begin() + hi);
    low_ += static_cast<long>(lo);
  }
}

int LaurentCyc::modulus() const {
  for (auto& c : c_)
    if (c.modulus()) return c.modulus();
  return 0;
}

CycInt LaurentCyc::coeff(long e) const {
  if (c_.empty() || e < low_ || e > high()) return CycInt(0);
  return c_[e - low_];
}

bool LaurentCyc::is_integral() const {
  for (auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

LaurentCyc LaurentCyc::operator-() const {
  LaurentCyc r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentCyc& LaurentCyc::operator+=(const LaurentCyc& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<CycInt> c(hi - lo + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c[low_ - lo + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[o.low_ - lo + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

LaurentCyc& LaurentCyc::operator-=(const LaurentCyc& o) { return *this += -o; }

LaurentCyc operator*(const LaurentCyc& a, const LaurentCyc& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<CycInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentCyc(a.low_ + b.low_, std::move(c));
}

bool operator==(const LaurentCyc& a, const LaurentCyc& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.c_.empty()) return true;
  if (a.low_ != b.low_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

LaurentCyc LaurentCyc::shifted(long k) const {
  LaurentCyc r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentCyc LaurentCyc::pow(unsigned e) const {
  LaurentCyc r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

LaurentCyc LaurentCyc::map_coeffs(long galois_exponent) const {
  LaurentCyc r = *this;
  for (auto& c : r.c_) c = c.galois(galois_exponent);
  return r;
}

LaurentCyc LaurentCyc::scaled(const CycInt& s) const {
  LaurentCyc r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

std::string LaurentCyc::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const CycInt& c = c_[i];
    if (c.is_zero()) continue;
    long e = low_ + static_cast<long>(i);
    std::string s = c.str();
    bool simple = c.is_rational();
    if (simple) {
      bool neg = s[0] == '-';
      std::string mag = neg ? s.substr(1) : s;
      os << (neg ? "-" : (first ? "" : "+"));
      if (e == 0 || mag != "1") os << mag;
    } else {
      if (!first) os << '+';
      os << '(' << s << ')';
    }
    first = false;
    if (e != 0) {
      os << var;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentCyc laurent_involution(const LaurentCyc& d) {
  if (d.is_zero()) return d;
  std::vector<CycInt> c(d.coeffs().rbegin(), d.coeffs().rend());
  for (auto& x : c) x = x.conjugate();
  return LaurentCyc(-d.high(), std::move(c));
}

LaurentCyc laurent_normalize(const LaurentCyc& d) {
  if (d.is_zero()) return d;
  mpz_class g = 0;
  for (auto& c : d.coeffs()) g = gcd(g, c.content());
  std::vector<CycInt> c;
  c.reserve(d.coeffs().size());
  bool neg = d.coeffs().front().lex_negative();
  for (auto& x : d.coeffs()) {
    CycInt y = x.divide_exact(g);
    c.push_back(neg ? -y : y);
  }
  return LaurentCyc(0, std::move(c));
}

LaurentCyc laurent_divide_exact(const LaurentCyc& a, const LaurentCyc& b) {
  if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (a.is_zero()) return a;
  const auto& bc = b.coeffs();
  const CycInt& lead = bc.back();
  std::vector<CycInt> rem = a.coeffs();
  long n = static_cast<long>(rem.size()), m = static_cast<long>(bc.size());
  if (n < m) throw NonExactDivision("dividend has smaller span than divisor");
  std::vector<CycInt> quot(n - m + 1);
  for (long i = n - 1; i >= m - 1; --i) {
    if (rem[i].is_zero()) continue;
    CycInt c = rem[i].divide_exact(lead);
    quot[i - m + 1] = c;
    for (long j = 0; j < m; ++j) rem[i - m + 1 + j] -= c * bc[j];
  }
  for (long i = 0; i < m - 1; ++i)
    if (!rem[i].is_zero()) throw NonExactDivision("nonzero remainder in Laurent division");
  return LaurentCyc(a.low() - b.low(), std::move(quot));
}

int root_multiplicity(const LaurentCyc& d, int root, LaurentCyc* rest) {
  LaurentCyc cur = d;
  LaurentCyc lin = LaurentCyc::from_integers({-root, 1});
  int m = 0;
  while (!cur.is_zero()) {
    // value at t = root
    CycInt v(0);
    for (std::size_t i = 0; i < cur.coeffs().size(); ++i) {
      long e = cur.low() + static_cast<long>(i);
      bool flip = root == -1 && (e % 2 != 0);
      v += flip ? -cur.coeffs()[i] : cur.coeffs()[i];
    }
    if (!v.is_zero()) break;
    cur = laurent_divide_exact(cur, lin);
    ++m;
  }
  if (rest) *rest = cur;
  return m;
}

bool proportional_up_to_unit(const LaurentCyc& a, const LaurentCyc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.span() != b.span()) return false;
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i)
    if (ac[i] * bc[0] != bc[i] * ac[0]) return false;
  return true;
}

std::vector<u64> reduce_mod(const LaurentCyc& d, u64 r, u64 b) {
  std::vector<u64> out;
  out.reserve(d.coeffs().size());
  for (auto& c : d.coeffs()) out.push_back(c.reduce(r, b));
  return out;
}

}  // namespace tk
