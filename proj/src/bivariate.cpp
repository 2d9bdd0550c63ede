#include "autoconj/bivariate.hpp"

#include <stdexcept>

namespace autoconj {

BivariateFunction::BivariateFunction(Evaluator f, Eigen::Index dim, std::string label,
                                     std::optional<DualSlice> slice)
    : f_(std::move(f)), dim_(dim), label_(std::move(label)), slice_(std::move(slice)) {
  if (!f_) throw std::invalid_argument("BivariateFunction: empty evaluator");
  if (dim_ <= 0) throw std::invalid_argument("BivariateFunction: dimension must be positive");
  if (slice_ && (slice_->shift.rows() != dim_ || slice_->shift.cols() != dim_ ||
                 slice_->directions.rows() != dim_)) {
    throw std::invalid_argument("BivariateFunction: dual slice has the wrong shape");
  }
}

ExtReal BivariateFunction::operator()(const Vector& x, const Vector& xstar) const {
  require_dim(x, dim_, label_.c_str());
  require_dim(xstar, dim_, label_.c_str());
  return f_(x, xstar);
}

ExtReal BivariateFunction::joint(const Vector& z) const {
  require_dim(z, 2 * dim_, label_.c_str());
  return f_(z.head(dim_), z.tail(dim_));
}

BivariateFunction BivariateFunction::transpose() const {
  auto f = f_;
  return BivariateFunction([f](const Vector& xstar, const Vector& x) { return f(x, xstar); },
                           dim_, label_ + "^T");
}

bool is_proper_on(const BivariateFunction& f, const GridSpec& probe) {
  if (probe.dim() != 2 * f.dim()) throw DimensionError("is_proper_on: probe grid must be 2n-dimensional");
  for (std::int64_t i = 0; i < probe.node_count(); ++i) {
    if (f.joint(probe.node(i)).is_finite()) return true;
  }
  return false;
}

BivariateFunction register_checked(BivariateFunction f, const GridSpec& probe) {
  if (!is_proper_on(f, probe)) {
    throw std::invalid_argument("BivariateFunction '" + f.label() + "' is +inf on every probe node");
  }
  return f;
}

BivariateFunction add_constant(const BivariateFunction& f, double c) {
  return BivariateFunction([f, c](const Vector& x, const Vector& xs) { return f(x, xs) + ExtReal(c); },
                           f.dim(), f.label() + "+c", f.slice());
}

}  // namespace autoconj
