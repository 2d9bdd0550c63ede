#pragma once

#include <random>

#include "autoconj/linear_operator.hpp"

namespace testing_support {

using autoconj::Matrix;
using autoconj::Vector;

inline Vector uniform_vector(std::mt19937_64& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

inline Matrix gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

/// Symmetric PSD of the given rank.
inline Matrix random_psd(std::mt19937_64& rng, Eigen::Index n, Eigen::Index rank) {
  const Matrix b = gaussian_matrix(rng, n, rank);
  return b * b.transpose() / static_cast<double>(std::max<Eigen::Index>(rank, 1));
}

/// PSD symmetric part (rank n unless singular) plus a random antisymmetric part.
inline Matrix random_monotone(std::mt19937_64& rng, Eigen::Index n, bool singular = false) {
  const Matrix s = random_psd(rng, n, singular ? n - 1 : n) +
                   (singular ? 0.0 : 0.2) * Matrix::Identity(n, n);
  const Matrix k = gaussian_matrix(rng, n, n);
  return s + 0.5 * (k - k.transpose());
}

}  // namespace testing_support
