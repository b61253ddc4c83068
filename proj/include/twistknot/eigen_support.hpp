#pragma once

#include <Eigen/Core>

#include "twistknot/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<tk::CycInt> : GenericNumTraits<tk::CycInt> {
  using Real = tk::CycInt;
  using NonInteger = tk::CycInt;
  using Nested = tk::CycInt;
  using Literal = tk::CycInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return 0L; }
  static inline Real dummy_precision() { return 0L; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tk::LaurentCyc> : GenericNumTraits<tk::LaurentCyc> {
  using Real = tk::LaurentCyc;
  using NonInteger = tk::LaurentCyc;
  using Nested = tk::LaurentCyc;
  using Literal = tk::LaurentCyc;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return 0L; }
  static inline Real dummy_precision() { return 0L; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tk {

using LaurentMatrix = Eigen::Matrix<LaurentCyc, Eigen::Dynamic, Eigen::Dynamic>;

inline Eigen::Index nonzero_count(const LaurentMatrix& m) {
  Eigen::Index n = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) n += !m(i, j).is_zero();
  return n;
}

}  // namespace tk
