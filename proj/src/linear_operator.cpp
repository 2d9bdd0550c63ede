#include "autoconj/linear_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace autoconj {

void require_dim(const Vector& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(n) +
                         ", got " + std::to_string(v.size()));
  }
}

QuadraticForm::QuadraticForm(const Matrix& s, double eigen_cutoff) : eigen_cutoff_(eigen_cutoff) {
  if (s.rows() != s.cols()) throw std::invalid_argument("QuadraticForm: matrix is not square");
  if (s.rows() == 0) throw std::invalid_argument("QuadraticForm: empty matrix");
  matrix_ = 0.5 * (s + s.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> eig(matrix_);
  const Vector& lambda = eig.eigenvalues();
  const Matrix& v = eig.eigenvectors();
  const double top = lambda.maxCoeff();
  const double scale = std::max(std::abs(top), std::abs(lambda.minCoeff()));
  if (lambda.minCoeff() < -tol::kMonotone * (1.0 + scale)) {
    throw std::invalid_argument("QuadraticForm: matrix is not positive semidefinite");
  }
  largest_eigenvalue_ = std::max(top, 0.0);

  const double cutoff = eigen_cutoff_ * std::max(top, 1.0);
  const Eigen::Index n = matrix_.rows();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda(i) > cutoff) kept.push_back(i);
  }
  range_basis_.resize(n, static_cast<Eigen::Index>(kept.size()));
  pinv_ = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto i = kept[k];
    range_basis_.col(static_cast<Eigen::Index>(k)) = v.col(i);
    pinv_ += (1.0 / lambda(i)) * v.col(i) * v.col(i).transpose();
  }
  range_projector_ = range_basis_ * range_basis_.transpose();
}

double QuadraticForm::eval(const Vector& x) const {
  require_dim(x, dim(), "quad_eval");
  return std::max(0.5 * x.dot(matrix_ * x), 0.0);
}

bool QuadraticForm::in_range(const Vector& s) const {
  require_dim(s, dim(), "QuadraticForm::in_range");
  return (s - range_projector_ * s).norm() <= tol::kRange * (1.0 + s.norm());
}

ExtReal QuadraticForm::conjugate(const Vector& s) const {
  if (!in_range(s)) return kInf;
  return std::max(0.5 * s.dot(pinv_ * s), 0.0);
}

double quad_eval(const QuadraticForm& q, const Vector& x) { return q.eval(x); }

ExtReal quad_conjugate_eval(const QuadraticForm& q, const Vector& s) { return q.conjugate(s); }

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

bool certify_monotone(const Matrix& a, double tol) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol * (1.0 + operator_norm(a));
}

bool is_antisymmetric(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a + a.transpose()).cwiseAbs().maxCoeff() <= 2.0 * tol;
}

namespace {

Matrix checked_square(Matrix a, double monotone_tol) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("LinearMonotoneOperator: matrix must be square and nonempty");
  }
  if (!certify_monotone(a, monotone_tol)) {
    throw std::invalid_argument("LinearMonotoneOperator: matrix is not monotone");
  }
  return a;
}

}  // namespace

LinearMonotoneOperator::LinearMonotoneOperator(Matrix a, double monotone_tol)
    : matrix_(checked_square(std::move(a), monotone_tol)),
      symmetric_(0.5 * (matrix_ + matrix_.transpose())),
      antisymmetric_(0.5 * (matrix_ - matrix_.transpose())),
      norm_(operator_norm(matrix_)) {}

Vector LinearMonotoneOperator::apply(const Vector& x) const {
  require_dim(x, dim(), "LinearMonotoneOperator::apply");
  return matrix_ * x;
}

Decomposition decompose(const LinearMonotoneOperator& a) {
  return {a.symmetric_part(), a.antisymmetric_part()};
}

Matrix rotation(double theta) {
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace autoconj
