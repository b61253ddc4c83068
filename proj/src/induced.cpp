#include "twistknot/induced.hpp"

#include <map>

#include "twistknot/error.hpp"

namespace tk {

MonomialMatrix MonomialMatrix::identity(int p, int q) {
  MonomialMatrix m;
  m.p = p;
  m.q = q;
  m.col.resize(p);
  m.z.assign(p, 0);
  m.e.assign(p, 0);
  for (int i = 0; i < p; ++i) m.col[i] = i;
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix m = identity(p, q);
  for (int i = 0; i < p; ++i) {
    int c = col[i];
    m.col[c] = i;
    m.z[c] = (q - z[i]) % q;
    m.e[c] = -e[i];
  }
  return m;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix m = MonomialMatrix::identity(a.p, a.q);
  for (int i = 0; i < a.p; ++i) {
    int k = a.col[i];
    m.col[i] = b.col[k];
    m.z[i] = (a.z[i] + b.z[k]) % a.q;
    m.e[i] = a.e[i] + b.e[k];
  }
  return m;
}

namespace {

LaurentCyc zeta_t(int q, int z, long e) {
  if (q == 2) return LaurentCyc(CycInt(z % 2 ? -1L : 1L), e);
  return LaurentCyc(CycInt::zeta(q, z), e);
}

}  // namespace

LaurentMatrix MonomialMatrix::dense() const {
  LaurentMatrix m = LaurentMatrix::Constant(p, p, LaurentCyc());
  for (int i = 0; i < p; ++i) m(i, col[i]) = zeta_t(q, z[i], e[i]);
  return m;
}

MonomialMatrix induced_monomial(long j, const ModElem& v, const Character& chi, const ModuleRing& R) {
  const int p = static_cast<int>(R.p());
  const int q = static_cast<int>(chi.q ? chi.q : R.q());
  long r = j % p;
  if (r < 0) r += p;
  long tpow = (j - r) / p;
  MonomialMatrix m = MonomialMatrix::identity(p, q);
  for (int i = 0; i < p; ++i) {
    int c = static_cast<int>((i + r) % p);
    m.col[i] = c;
    m.e[i] = tpow + (i + r >= p ? 1 : 0);
    m.z[i] = chi.values.empty() ? 0 : static_cast<int>(chi(R.mul(R.x_pow(c), v)));
  }
  return m;
}

LaurentMatrix induced_matrix(long j, const ModElem& v, const Character& chi, const ModuleRing& R) {
  return induced_monomial(j, v, chi, R).dense();
}

std::vector<MonomialMatrix> generator_images(const Presentation& p, const MetabelianRep& rho, const Character& chi) {
  std::vector<MonomialMatrix> out;
  for (int g = 0; g < p.n; ++g) {
    int label = p.labels.empty() ? g : p.labels[g];
    out.push_back(induced_monomial(1, rho.v.at(label), chi, rho.ring));
  }
  return out;
}

std::vector<MonomialMatrix> abelian_images(const Presentation& pres, int p) {
  MonomialMatrix a = MonomialMatrix::identity(p, 2);
  for (int i = 0; i < p; ++i) {
    a.col[i] = (i + 1) % p;
    a.e[i] = i + 1 >= p ? 1 : 0;
  }
  return std::vector<MonomialMatrix>(pres.n, a);
}

namespace {

// (row, col) -> (t exponent, zeta exponent) -> integer coefficient
struct Accumulator {
  int q;
  std::map<std::pair<int, int>, std::map<std::pair<long, int>, long>> cells;

  void add(int rb, int cb, const MonomialMatrix& m, long c) {
    for (int i = 0; i < m.p; ++i) {
      auto& cell = cells[{rb * m.p + i, cb * m.p + m.col[i]}];
      long& v = cell[{m.e[i], m.z[i]}];
      v += c;
    }
  }

  LaurentMatrix build(int rows, int cols) const {
    LaurentMatrix out = LaurentMatrix::Constant(rows, cols, LaurentCyc());
    for (auto& [pos, terms] : cells) {
      LaurentCyc entry;
      std::map<long, std::vector<mpz_class>> by_t;
      for (auto& [key, c] : terms) {
        if (c == 0) continue;
        auto& red = by_t[key.first];
        if (red.empty()) red.assign(q, 0);
        red[key.second] += c;
      }
      for (auto& [e, red] : by_t) {
        CycInt coef = q == 2 ? CycInt(mpz_class(red[0] - red[1])) : CycInt::from_redundant(q, red);
        entry += LaurentCyc(coef, e);
      }
      out(pos.first, pos.second) = entry;
    }
    return out;
  }
};

}  // namespace

LaurentMatrix substitute(const FoxMatrix& fox, const std::vector<MonomialMatrix>& images) {
  if (images.empty()) throw DomainError("no generator images");
  const int p = images[0].p;
  Accumulator acc{images[0].q, {}};
  std::vector<MonomialMatrix> inv;
  for (auto& m : images) inv.push_back(m.inverse());
  for (int i = 0; i < fox.rows; ++i)
    for (int j = 0; j < fox.cols; ++j)
      for (auto& [w, c] : fox(i, j).terms()) {
        MonomialMatrix m = MonomialMatrix::identity(p, images[0].q);
        for (auto& l : w) m = m * (l.exp > 0 ? images[l.gen] : inv[l.gen]);
        acc.add(i, j, m, c);
      }
  return acc.build(fox.rows * p, fox.cols * p);
}

LaurentMatrix substituted_reduced_fox(const Presentation& pres, const std::vector<MonomialMatrix>& images) {
  if (pres.relators.empty()) return LaurentMatrix(0, 0);
  const int p = images.at(0).p;
  const int q = images[0].q;
  const int base = pres.base_index();
  std::vector<int> col(pres.n, -1);
  int cols = 0;
  for (int g = 0; g < pres.n; ++g)
    if (g != base) col[g] = cols++;
  std::vector<MonomialMatrix> inv;
  for (auto& m : images) inv.push_back(m.inverse());
  Accumulator acc{q, {}};
  const int rows = static_cast<int>(pres.relators.size()) - 1;
  for (int r = 0; r < rows; ++r) {
    MonomialMatrix prefix = MonomialMatrix::identity(p, q);
    for (const auto& l : pres.relators[r]) {
      if (l.exp > 0) {
        if (col[l.gen] >= 0) acc.add(r, col[l.gen], prefix, 1);
        prefix = prefix * images[l.gen];
      } else {
        prefix = prefix * inv[l.gen];
        if (col[l.gen] >= 0) acc.add(r, col[l.gen], prefix, -1);
      }
    }
  }
  return acc.build(rows * p, cols * p);
}

}  // namespace tk
