#pragma once

#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

namespace flopcalc {

template <class Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by fraction-exact Gaussian elimination; any nonzero entry is a pivot.
template <class Scalar>
Eigen::Index exact_rank(ExactMatrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c) == Scalar(0)) continue;
      const Scalar f = m(r, c) / m(rank, c);
      for (Eigen::Index k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

template <class Scalar>
Eigen::Index exact_nullity(const ExactMatrix<Scalar>& m) {
  return m.cols() - exact_rank<Scalar>(m);
}

}  // namespace flopcalc
