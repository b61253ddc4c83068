#include "twistknot/fq.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

PolyFq::PolyFq(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= q_;
  trim();
}

PolyFq PolyFq::from_signed(u64 q, const std::vector<i64>& coeffs) {
  std::vector<u64> c(coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_mod(coeffs[i], q);
  return PolyFq(q, std::move(c));
}

PolyFq PolyFq::monomial(u64 q, u64 c, std::size_t deg) {
  std::vector<u64> v(deg + 1, 0);
  v[deg] = c;
  return PolyFq(q, std::move(v));
}

void PolyFq::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 PolyFq::eval(u64 x) const {
  u64 r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = add_mod(mul_mod(r, x, q_), c_[i], q_);
  return r;
}

PolyFq PolyFq::monic() const {
  if (c_.empty()) return *this;
  return inv_mod(lead(), q_) * *this;
}

PolyFq PolyFq::derivative() const {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul_mod(c_[i], i % q_, q_));
  return PolyFq(q_, std::move(d));
}

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a[i], b[i], a.q_);
  return PolyFq(a.q_, std::move(c));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
  std::vector<u64> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a[i], b[i], a.q_);
  return PolyFq(a.q_, std::move(c));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
  if (a.is_zero() || b.is_zero()) return PolyFq(a.q_);
  std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = add_mod(c[i + j], mul_mod(a.c_[i], b.c_[j], a.q_), a.q_);
  }
  return PolyFq(a.q_, std::move(c));
}

PolyFq operator*(u64 s, const PolyFq& a) {
  std::vector<u64> c(a.c_);
  for (auto& x : c) x = mul_mod(x, s % a.q_, a.q_);
  return PolyFq(a.q_, std::move(c));
}

bool operator<(const PolyFq& a, const PolyFq& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string PolyFq::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

void divmod(const PolyFq& a, const PolyFq& b, PolyFq& quot, PolyFq& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const u64 q = a.modulus();
  std::vector<u64> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    quot = PolyFq(q);
    rem = a;
    return;
  }
  std::vector<u64> qt(a.degree() - db + 1, 0);
  const u64 inv = inv_mod(b.lead(), q);
  for (int i = a.degree(); i >= db; --i) {
    u64 c = mul_mod(r[i], inv, q);
    qt[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = sub_mod(r[i - db + j], mul_mod(c, bc[j], q), q);
  }
  r.resize(db);
  quot = PolyFq(q, std::move(qt));
  rem = PolyFq(q, std::move(r));
}

PolyFq operator%(const PolyFq& a, const PolyFq& b) {
  PolyFq qt, r;
  divmod(a, b, qt, r);
  return r;
}

PolyFq operator/(const PolyFq& a, const PolyFq& b) {
  PolyFq qt, r;
  divmod(a, b, qt, r);
  return qt;
}

PolyFq gcd(PolyFq a, PolyFq b) {
  while (!b.is_zero()) {
    PolyFq r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFq powmod(PolyFq base, u64 e, const PolyFq& m) {
  PolyFq r = PolyFq(m.modulus(), {1}) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

namespace {

bool is_one(const PolyFq& f) { return f.degree() == 0; }

// f = prod g_i^i with g_i squarefree; f monic.
std::vector<std::pair<PolyFq, int>> squarefree(const PolyFq& f) {
  const u64 q = f.modulus();
  std::vector<std::pair<PolyFq, int>> out;
  PolyFq c = gcd(f, f.derivative());
  PolyFq w = f / c;
  int i = 1;
  while (!is_one(w)) {
    PolyFq y = gcd(w, c);
    PolyFq fac = w / y;
    if (!is_one(fac)) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!is_one(c)) {
    std::vector<u64> root;
    const auto& cc = c.coeffs();
    for (std::size_t k = 0; k < cc.size(); k += q) root.push_back(cc[k]);
    for (auto& [g, m] : squarefree(PolyFq(q, root).monic())) out.emplace_back(g, m * static_cast<int>(q));
  }
  return out;
}

// Returns (g_d, d): g_d the product of all irreducible factors of degree d.
std::vector<std::pair<PolyFq, int>> distinct_degree(PolyFq f) {
  const u64 q = f.modulus();
  std::vector<std::pair<PolyFq, int>> out;
  PolyFq x = PolyFq::x(q);
  PolyFq h = x % f;
  int d = 1;
  while (f.degree() >= 2 * d) {
    h = powmod(h, q, f);
    PolyFq g = gcd(h - x, f);
    if (!is_one(g)) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const PolyFq& g, int d, std::mt19937_64& rng, std::vector<PolyFq>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const u64 q = g.modulus();
  for (;;) {
    std::vector<u64> a(g.degree());
    for (auto& c : a) c = rng() % q;
    PolyFq ap(q, a);
    if (ap.degree() < 1) continue;
    PolyFq h(q);
    if (q == 2) {
      PolyFq t = ap;
      h = ap;
      for (int k = 1; k < d; ++k) {
        t = (t * t) % g;
        h = h + t;
      }
    } else {
      PolyFq t = ap, prod = ap;
      for (int k = 1; k < d; ++k) {
        t = powmod(t, q, g);
        prod = (prod * t) % g;
      }
      h = powmod(prod, (q - 1) / 2, g) - PolyFq(q, {1});
    }
    PolyFq s = gcd(h, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(g / s, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FactorPower> factor_over_fq(const PolyFq& f, u64* leading, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (!is_prime(f.modulus())) throw DomainError("factor_over_fq needs a prime modulus");
  if (leading) *leading = f.lead();
  std::vector<FactorPower> out;
  std::mt19937_64 rng(seed);
  for (auto& [sq, mult] : squarefree(f.monic())) {
    for (auto& [g, d] : distinct_degree(sq)) {
      std::vector<PolyFq> parts;
      equal_degree(g, d, rng, parts);
      for (auto& p : parts) out.push_back({p, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // A factor may appear from two squarefree layers; merge them.
  std::vector<FactorPower> merged;
  for (auto& fp : out) {
    if (!merged.empty() && merged.back().factor == fp.factor)
      merged.back().multiplicity += fp.multiplicity;
    else
      merged.push_back(fp);
  }
  return merged;
}

std::vector<int> factor_degrees(const std::vector<FactorPower>& fs) {
  std::vector<int> d;
  for (auto& f : fs)
    for (int i = 0; i < f.multiplicity; ++i) d.push_back(f.factor.degree());
  std::sort(d.begin(), d.end());
  return d;
}

bool is_irreducible(const PolyFq& f) {
  if (f.degree() <= 0) return false;
  auto fs = factor_over_fq(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<PolyFq> cyclotomic_factors(u64 p, u64 q) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw DomainError("p and q must be distinct primes");
  PolyFq f = PolyFq::monomial(q, 1, p) - PolyFq(q, {1});
  std::vector<PolyFq> out;
  PolyFq lin = PolyFq::from_signed(q, {-1, 1});
  out.push_back(lin);
  for (auto& fp : factor_over_fq(f))
    if (!(fp.factor == lin)) out.push_back(fp.factor);
  return out;
}

std::string factor_label(const PolyFq& f) {
  if (f.degree() == 1) {
    const u64 q = f.modulus();
    u64 root = sub_mod(0, f.monic()[0], q);
    return "x-" + std::to_string(root);
  }
  return f.str();
}

}  // namespace tk
