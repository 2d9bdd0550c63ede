#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "autoconj/bivariate.hpp"
#include "autoconj/grid.hpp"

// Brute-force checks used to verify closed forms: grid Legendre transforms,
// autoconjugacy residuals, graph extraction and monotonicity audits. All of
// them are O(nodes) per query and meant for joint dimension <= 4.

namespace autoconj {

using JointFunction = std::function<ExtReal(const Vector&)>;
using PointPair = std::pair<Vector, Vector>;

/// The function is +inf on every grid node, so its restriction has
/// conjugate -inf.
class ImproperRestriction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tabulates f once over all grid nodes; conjugate queries are then maxima
/// of <w, query> - f(w) over the finite nodes.
class GridConjugator {
 public:
  GridConjugator(const JointFunction& f, GridSpec grid);

  /// Lower bound on f*(query). Throws ImproperRestriction if f is +inf on
  /// every node.
  double operator()(const Vector& query) const;

  const GridSpec& grid() const { return grid_; }
  std::size_t finite_nodes() const { return static_cast<std::size_t>(nodes_.cols()); }
  /// Largest finite-difference gradient norm between finite neighbours.
  double lipschitz() const { return lipschitz_; }
  /// 10 * h * L with h the largest grid step.
  double error_bound() const { return 10.0 * grid_.max_step() * lipschitz_; }

 private:
  GridSpec grid_;
  Matrix nodes_;   // finite nodes, one per column
  Vector values_;  // f at those nodes
  double lipschitz_ = 0.0;
};

double grid_conjugate(const JointFunction& f, const GridSpec& grid, const Vector& query);
/// F viewed as a function of the joint variable (x, x*).
double grid_conjugate(const BivariateFunction& f, const GridSpec& grid, const Vector& query);

JointFunction as_joint(const BivariateFunction& f);

struct AutoconjugacyReport {
  /// max |F*(x*, x) - F(x, x*)| over test points where F is finite.
  double max_residual = 0.0;
  std::size_t finite_points = 0;
  /// Points where F = +inf and the grid conjugate is bounded as the box
  /// grows (i.e. the conjugate side looks finite).
  std::vector<PointPair> one_sided;
  /// Points where F = +inf and the grid conjugate grows with the box.
  std::size_t infinite_points = 0;
  double error_bound = 0.0;
};

/// Compares the grid conjugate at (x*, x) against F(x, x*). Test points
/// must lie inside the grid box. Throws std::invalid_argument on an empty
/// test set.
AutoconjugacyReport autoconjugacy_residual(const BivariateFunction& f, const GridSpec& grid,
                                           const std::vector<PointPair>& test_points);

struct GraphPoint {
  Vector x;
  Vector xstar;
  double residual;  // F(x, x*) - <x, x*>
};

struct GraphSample {
  std::vector<GraphPoint> pairs;
  double tol = 0.0;
  Eigen::Index dim = 0;
};

/// All grid nodes (x, x*) with |F(x, x*) - <x, x*>| <= tol.
GraphSample extract_graph(const BivariateFunction& f, const GridSpec& grid, double tol);

struct MonotoneAudit {
  bool monotone = true;
  /// Most negative <x - y, x* - y*> over all pairs (0 for fewer than two points).
  double worst = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};

MonotoneAudit audit_monotone(const GraphSample& sample, double tol_pair = 0.0);

/// F(x, x*) >= <x, x*> - tol at every test point.
bool fenchel_young_check(const BivariateFunction& f, const std::vector<PointPair>& test_points,
                         double tol = 1e-12);

/// CSV with header x1..xn,xstar1..xstarn,residual.
void write_graph_csv(std::ostream& out, const GraphSample& sample);

}  // namespace autoconj
