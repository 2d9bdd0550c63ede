#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "autoconj/ext_real.hpp"

namespace autoconj {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

namespace tol {
/// Eigenvalues below this times max(largest eigenvalue, 1) count as zero.
inline constexpr double kPinvCutoff = 1e-10;
/// s is in ran S when ||s - P s|| <= kRange * (1 + ||s||).
inline constexpr double kRange = 1e-8;
/// Default for certify_monotone.
inline constexpr double kMonotone = 1e-10;
/// Entrywise tolerance for accepting a matrix as antisymmetric.
inline constexpr double kAntisymmetric = 1e-12;
}  // namespace tol

/// Raised when vector or matrix sizes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_dim(const Vector& v, Eigen::Index n, const char* what);

/// Symmetric positive semidefinite S together with the machinery for
/// q(x) = 1/2 <x, S x> and its Fenchel conjugate
///   q*(s) = 1/2 <s, S^+ s>  if s in ran S,   +inf otherwise.
class QuadraticForm {
 public:
  /// Symmetrizes the input. Throws std::invalid_argument if it is not
  /// square or has an eigenvalue below -kMonotone * (1 + ||S||).
  explicit QuadraticForm(const Matrix& s, double eigen_cutoff = tol::kPinvCutoff);

  Eigen::Index dim() const { return matrix_.rows(); }
  Eigen::Index rank() const { return range_basis_.cols(); }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& pinv() const { return pinv_; }
  const Matrix& range_projector() const { return range_projector_; }
  /// Orthonormal columns spanning ran S.
  const Matrix& range_basis() const { return range_basis_; }
  double eigen_cutoff() const { return eigen_cutoff_; }
  double largest_eigenvalue() const { return largest_eigenvalue_; }

  double eval(const Vector& x) const;
  ExtReal conjugate(const Vector& s) const;
  bool in_range(const Vector& s) const;

 private:
  Matrix matrix_;
  Matrix pinv_;
  Matrix range_projector_;
  Matrix range_basis_;
  double eigen_cutoff_;
  double largest_eigenvalue_ = 0.0;
};

double quad_eval(const QuadraticForm& q, const Vector& x);
ExtReal quad_conjugate_eval(const QuadraticForm& q, const Vector& s);

/// Spectral norm.
double operator_norm(const Matrix& a);

/// True iff a is square and the smallest eigenvalue of (a + a^T)/2 is at
/// least -tol * (1 + ||a||).
bool certify_monotone(const Matrix& a, double tol = tol::kMonotone);

bool is_antisymmetric(const Matrix& a, double tol = tol::kAntisymmetric);

/// Continuous linear monotone operator on R^n with A* = A^T.
class LinearMonotoneOperator {
 public:
  /// Throws std::invalid_argument for non-square or non-monotone input.
  explicit LinearMonotoneOperator(Matrix a, double monotone_tol = tol::kMonotone);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  /// A+ = (A + A^T)/2 as a quadratic form.
  const QuadraticForm& symmetric_part() const { return symmetric_; }
  /// A_o = (A - A^T)/2.
  const Matrix& antisymmetric_part() const { return antisymmetric_; }
  double norm() const { return norm_; }

  Vector apply(const Vector& x) const;

 private:
  Matrix matrix_;
  QuadraticForm symmetric_;
  Matrix antisymmetric_;
  double norm_;
};

struct Decomposition {
  QuadraticForm symmetric;
  Matrix antisymmetric;
};

Decomposition decompose(const LinearMonotoneOperator& a);

/// Rotation by theta in the plane.
Matrix rotation(double theta);

}  // namespace autoconj
