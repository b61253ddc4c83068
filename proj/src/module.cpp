#include "twistknot/module.hpp"

#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

ModuleRing::ModuleRing(u64 p, const PolyFq& f) : p_(p), f_(f.monic()) {
  if (f_.degree() < 1) throw DomainError("module factor must have positive degree");
  if (f_[0] == 0) throw DomainError("module factor must not be divisible by x");
}

ModElem ModuleRing::one() const {
  ModElem v = zero();
  v[0] = 1 % q();
  return v;
}

ModElem ModuleRing::from_poly(const PolyFq& g) const {
  PolyFq r = g % f_;
  ModElem v = zero();
  for (int i = 0; i <= r.degree(); ++i) v[i] = r[i];
  return v;
}

ModElem ModuleRing::x_pow(long k) const {
  long e = k % static_cast<long>(p_);
  if (e < 0) e += static_cast<long>(p_);
  return from_poly(PolyFq::monomial(q(), 1, static_cast<std::size_t>(e)));
}

ModElem ModuleRing::add(const ModElem& a, const ModElem& b) const {
  ModElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add_mod(a[i], b[i], q());
  return r;
}

ModElem ModuleRing::sub(const ModElem& a, const ModElem& b) const {
  ModElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_mod(a[i], b[i], q());
  return r;
}

ModElem ModuleRing::neg(const ModElem& a) const { return sub(zero(), a); }

ModElem ModuleRing::mul(const ModElem& a, const ModElem& b) const { return from_poly(to_poly(a) * to_poly(b)); }

ModElem ModuleRing::scale(u64 s, const ModElem& a) const {
  ModElem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], s % q(), q());
  return r;
}

bool ModuleRing::is_zero(const ModElem& a) const {
  for (u64 c : a)
    if (c) return false;
  return true;
}

MatrixFq ModuleRing::mult_matrix(const ModElem& c) const {
  MatrixFq m(n(), n());
  for (int j = 0; j < n(); ++j) {
    ModElem col = mul(c, x_pow(j));
    for (int i = 0; i < n(); ++i) m(i, j) = col[i];
  }
  return m;
}

std::string ModuleRing::str(const ModElem& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || v[i] != 1) os << v[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

u64 Character::operator()(const ModElem& v) const {
  u64 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = add_mod(s, mul_mod(v[i], values[i], q), q);
  return s;
}

bool Character::is_trivial() const {
  for (u64 c : values)
    if (c) return false;
  return true;
}

std::string Character::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

Character scaled(const Character& c, u64 s) {
  Character r = c;
  for (auto& v : r.values) v = mul_mod(v, s % c.q, c.q);
  return r;
}

SemidirectElem semidirect_mul(const ModuleRing& R, const SemidirectElem& a, const SemidirectElem& b) {
  return {a.j + b.j, R.add(R.mul(R.x_pow(-b.j), a.v), b.v)};
}

SemidirectElem semidirect_inverse(const ModuleRing& R, const SemidirectElem& a) {
  return {-a.j, R.neg(R.mul(R.x_pow(a.j), a.v))};
}

SemidirectElem MetabelianRep::evaluate(const Word& w, const std::vector<int>& labels) const {
  SemidirectElem acc{0, ring.zero()};
  for (const auto& l : w) {
    SemidirectElem g = image(labels.empty() ? l.gen : labels[l.gen]);
    acc = semidirect_mul(ring, acc, l.exp > 0 ? g : semidirect_inverse(ring, g));
  }
  return acc;
}

bool MetabelianRep::satisfies(const Presentation& p) const {
  for (const auto& r : p.relators) {
    SemidirectElem e = evaluate(r, p.labels);
    if (e.j != 0 || !ring.is_zero(e.v)) return false;
  }
  return true;
}

bool MetabelianRep::is_trivial() const {
  for (auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

std::vector<Character> enumerate_characters(const ModuleRing& R, bool up_to_scalar) {
  std::vector<Character> out;
  const u64 q = R.q();
  const int n = R.n();
  u64 total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  for (u64 code = 1; code < total; ++code) {
    Character c{std::vector<u64>(n), q};
    u64 x = code;
    for (int i = 0; i < n; ++i) {
      c.values[i] = x % q;
      x /= q;
    }
    if (up_to_scalar) {
      // canonical: first nonzero value equals 1
      u64 lead = 0;
      for (u64 v : c.values)
        if (v) {
          lead = v;
          break;
        }
      if (lead != 1) continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace tk
