#include "autoconj/fitzpatrick.hpp"

#include <limits>
#include <stdexcept>

namespace autoconj {

ExtReal fitz_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar) {
  require_dim(x, a.dim(), "fitz_eval x");
  require_dim(xstar, a.dim(), "fitz_eval x*");
  return 0.5 * a.symmetric_part().conjugate(xstar + a.matrix().transpose() * x);
}

bool on_graph(const Matrix& a, const Vector& x, const Vector& xstar) {
  return (xstar - a * x).norm() <= tol::kRange * (1.0 + xstar.norm());
}

ExtReal fitz_conjugate_eval(const LinearMonotoneOperator& a, const Vector& xstar, const Vector& x) {
  require_dim(x, a.dim(), "fitz_conjugate_eval x");
  require_dim(xstar, a.dim(), "fitz_conjugate_eval x*");
  if (!on_graph(a.matrix(), x, xstar)) return kInf;
  return x.dot(a.matrix() * x);
}

double fitz_sampled(const std::vector<PointPair>& graph_points, const Vector& x, const Vector& xstar) {
  if (graph_points.empty()) throw std::invalid_argument("fitz_sampled: empty graph sample");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [y, ystar] : graph_points) {
    require_dim(y, x.size(), "fitz_sampled y");
    require_dim(ystar, x.size(), "fitz_sampled y*");
    best = std::max(best, x.dot(ystar) + y.dot(xstar) - y.dot(ystar));
  }
  return best;
}

BivariateFunction fitzpatrick_function(const LinearMonotoneOperator& a) {
  DualSlice slice{-a.matrix().transpose(), a.symmetric_part().range_basis()};
  return BivariateFunction([a](const Vector& x, const Vector& xs) { return fitz_eval(a, x, xs); },
                           a.dim(), "F_A", std::move(slice));
}

BivariateFunction fitzpatrick_conjugate_transpose(const LinearMonotoneOperator& a) {
  DualSlice slice{a.matrix(), Matrix(a.dim(), 0)};
  return BivariateFunction(
      [a](const Vector& x, const Vector& xs) { return fitz_conjugate_eval(a, xs, x); }, a.dim(),
      "F_A^*T", std::move(slice));
}

BivariateFunction graph_indicator(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("graph_indicator: matrix must be square");
  DualSlice slice{m, Matrix(m.rows(), 0)};
  return BivariateFunction(
      [m](const Vector& x, const Vector& xs) { return on_graph(m, x, xs) ? ExtReal(0.0) : kInf; },
      m.rows(), "iota_graA", std::move(slice));
}

}  // namespace autoconj
