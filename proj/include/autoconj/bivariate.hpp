#pragma once

#include <functional>
#include <optional>
#include <string>

#include "autoconj/ext_real.hpp"
#include "autoconj/grid.hpp"
#include "autoconj/linear_operator.hpp"

namespace autoconj {

/// For fixed x, the x* at which a function can be finite lie in the affine
/// set  shift * x + span(directions).  Functions whose x*-domain is
/// lower-dimensional (graph indicators, representers of operators with a
/// singular symmetric part) carry one so that minimizations over x* can be
/// restricted to it instead of probing a measure-zero set.
struct DualSlice {
  Matrix shift;
  Matrix directions;
};

/// F : R^n x R^n -> ]-inf, +inf].
class BivariateFunction {
 public:
  using Evaluator = std::function<ExtReal(const Vector& x, const Vector& xstar)>;

  BivariateFunction(Evaluator f, Eigen::Index dim, std::string label,
                    std::optional<DualSlice> slice = std::nullopt);

  ExtReal operator()(const Vector& x, const Vector& xstar) const;
  /// Evaluation at the stacked 2n-vector (x, x*).
  ExtReal joint(const Vector& z) const;

  Eigen::Index dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::optional<DualSlice>& slice() const { return slice_; }

  /// F^T(x*, x) = F(x, x*).
  BivariateFunction transpose() const;

 private:
  Evaluator f_;
  Eigen::Index dim_;
  std::string label_;
  std::optional<DualSlice> slice_;
};

/// At least one node of the probe grid (over the joint 2n variable) is finite.
bool is_proper_on(const BivariateFunction& f, const GridSpec& probe);

/// Returns f after checking is_proper_on; throws std::invalid_argument otherwise.
BivariateFunction register_checked(BivariateFunction f, const GridSpec& probe);

BivariateFunction add_constant(const BivariateFunction& f, double c);

}  // namespace autoconj
