#pragma once

#include <Eigen/Core>

#include "twistknot/modular.hpp"

namespace tk {

using MatrixFq = Eigen::Matrix<u64, Eigen::Dynamic, Eigen::Dynamic>;
using VectorFq = Eigen::Matrix<u64, Eigen::Dynamic, 1>;

// Reduced row echelon form over F_q in place; returns pivot columns.
std::vector<int> rref_mod(MatrixFq& a, u64 q);

// Basis of {v : a v = 0} over F_q, one column per basis vector.
MatrixFq nullspace_mod(MatrixFq a, u64 q);

// Determinant over F_r of a square matrix with entries already reduced.
u64 det_mod(MatrixFq a, u64 r);

}  // namespace tk
