#include "autoconj/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoconj {

GridSpec::GridSpec(Vector lower, Vector upper, int points_per_axis)
    : lower_(std::move(lower)), upper_(std::move(upper)), m_(points_per_axis), count_(1) {
  if (lower_.size() != upper_.size() || lower_.size() == 0) {
    throw std::invalid_argument("GridSpec: lower and upper must have the same nonzero dimension");
  }
  if (m_ < 3) throw std::invalid_argument("GridSpec: need at least 3 points per axis");
  for (Eigen::Index i = 0; i < lower_.size(); ++i) {
    if (!(lower_(i) < upper_(i))) throw std::invalid_argument("GridSpec: lower must be < upper");
    count_ *= m_;
  }
}

GridSpec GridSpec::cube(Eigen::Index dim, double lo, double hi, int points_per_axis) {
  return GridSpec(Vector::Constant(dim, lo), Vector::Constant(dim, hi), points_per_axis);
}

double GridSpec::step(Eigen::Index axis) const { return (upper_(axis) - lower_(axis)) / (m_ - 1); }

double GridSpec::max_step() const {
  double h = 0.0;
  for (Eigen::Index i = 0; i < dim(); ++i) h = std::max(h, step(i));
  return h;
}

double GridSpec::coordinate(Eigen::Index axis, int k) const {
  if (k == m_ - 1) return upper_(axis);
  return lower_(axis) + k * step(axis);
}

Vector GridSpec::node(std::int64_t idx) const {
  Vector p(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    p(i) = coordinate(i, static_cast<int>(idx % m_));
    idx /= m_;
  }
  return p;
}

bool GridSpec::interior(const Vector& p, double margin) const {
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (p(i) < lower_(i) + margin || p(i) > upper_(i) - margin) return false;
  }
  return true;
}

GridSpec GridSpec::scaled(double factor) const {
  const Vector center = 0.5 * (lower_ + upper_);
  const Vector half = 0.5 * (upper_ - lower_);
  return GridSpec(center - factor * half, center + factor * half, m_);
}

}  // namespace autoconj
