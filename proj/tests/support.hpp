#pragma once

#include <random>
#include <string>
#include <vector>

#include "twistknot/eigen_support.hpp"
#include "twistknot/knot_table.hpp"
#include "twistknot/laurent.hpp"

namespace tktest {

using namespace tk;

inline std::vector<KnotRecord> bundled() {
  auto t = load_knot_table(std::string(TWISTKNOT_DATA_DIR) + "/knots.json");
  auto e = load_knot_table(std::string(TWISTKNOT_DATA_DIR) + "/extras.json");
  t.insert(t.end(), e.begin(), e.end());
  return t;
}

inline Presentation knot(const std::string& name) {
  static const auto table = bundled();
  const KnotRecord* k = find_knot(table, name);
  if (!k) throw std::runtime_error("missing knot " + name);
  return knot_presentation(*k);
}

// Element of Z[zeta_q] from coefficients of zeta^0, zeta^1, ... (any length <= q).
inline CycInt cyc(int q, const std::vector<long>& b) {
  std::vector<mpz_class> m(q, 0);
  for (std::size_t i = 0; i < b.size(); ++i) m[i % q] += b[i];
  return CycInt::from_redundant(q, m);
}

inline LaurentCyc poly(const std::vector<CycInt>& ascending, long low = 0) { return LaurentCyc(low, ascending); }

inline CycInt random_cyc(std::mt19937_64& rng, int q, int bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<long> b(q - 1);
  for (auto& x : b) x = d(rng);
  return cyc(q, b);
}

inline LaurentCyc random_laurent(std::mt19937_64& rng, int q, int max_span, int bound) {
  std::uniform_int_distribution<int> sp(0, max_span), lo(-2, 2);
  int span = sp(rng);
  std::vector<CycInt> c;
  for (int i = 0; i <= span; ++i) c.push_back(random_cyc(rng, q, bound));
  if (c.back().is_zero()) c.back() = CycInt::one(q);
  if (c.front().is_zero()) c.front() = CycInt::one(q);
  return LaurentCyc(lo(rng), c);
}

// Laplace expansion along the first row.
inline LaurentCyc cofactor_det(const LaurentMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return LaurentCyc(1L);
  if (n == 1) return m(0, 0);
  LaurentCyc acc;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LaurentMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    LaurentCyc term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace tktest
