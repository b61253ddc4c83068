#include "twistknot/linalg_fq.hpp"

namespace tk {

std::vector<int> rref_mod(MatrixFq& a, u64 q) {
  std::vector<int> piv;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pr = r;
    while (pr < rows && a(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    a.row(r).swap(a.row(pr));
    u64 inv = inv_mod(a(r, c), q);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = mul_mod(a(r, j), inv, q);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      u64 f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = sub_mod(a(i, j), mul_mod(f, a(r, j), q), q);
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

MatrixFq nullspace_mod(MatrixFq a, u64 q) {
  auto piv = rref_mod(a, q);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  MatrixFq basis(cols, cols - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    VectorFq v = VectorFq::Zero(cols);
    v(free) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i]) = sub_mod(0, a(i, free), q);
    basis.col(k++) = v;
  }
  return basis;
}

u64 det_mod(MatrixFq a, u64 r) {
  const Eigen::Index n = a.rows();
  u64 det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pr = c;
    while (pr < n && a(pr, c) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      a.row(c).swap(a.row(pr));
      det = sub_mod(0, det, r);
    }
    det = mul_mod(det, a(c, c), r);
    u64 inv = inv_mod(a(c, c), r);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      u64 f = mul_mod(a(i, c), inv, r);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) = sub_mod(a(i, j), mul_mod(f, a(c, j), r), r);
    }
  }
  return det;
}

}  // namespace tk
