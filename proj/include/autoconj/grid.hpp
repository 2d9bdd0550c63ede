#pragma once

#include <cstdint>
#include <string>

#include "autoconj/linear_operator.hpp"

namespace autoconj {

/// Axis-aligned box with m equally spaced nodes per axis (endpoints
/// included).
class GridSpec {
 public:
  /// Throws std::invalid_argument unless lower < upper componentwise and m >= 3.
  GridSpec(Vector lower, Vector upper, int points_per_axis);

  /// Same interval [lo, hi] on every one of dim axes.
  static GridSpec cube(Eigen::Index dim, double lo, double hi, int points_per_axis);

  Eigen::Index dim() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  int points_per_axis() const { return m_; }
  double step(Eigen::Index axis) const;
  double max_step() const;
  std::int64_t node_count() const { return count_; }

  /// Node with flat index idx; axis 0 varies fastest.
  Vector node(std::int64_t idx) const;
  double coordinate(Eigen::Index axis, int k) const;

  /// True when every coordinate is at least margin away from the box faces.
  bool interior(const Vector& p, double margin) const;

  /// Same node layout on the box scaled about its center by factor.
  GridSpec scaled(double factor) const;

 private:
  Vector lower_;
  Vector upper_;
  int m_;
  std::int64_t count_;
};

}  // namespace autoconj
