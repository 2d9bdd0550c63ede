#include "autoconj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

#include "autoconj/format.hpp"

namespace autoconj {

GridConjugator::GridConjugator(const JointFunction& f, GridSpec grid) : grid_(std::move(grid)) {
  const std::int64_t count = grid_.node_count();
  const Eigen::Index d = grid_.dim();
  std::vector<double> table(static_cast<std::size_t>(count));
  std::int64_t finite = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const ExtReal v = f(grid_.node(i));
    table[static_cast<std::size_t>(i)] = v.to_double();
    if (v.is_finite()) ++finite;
  }
  nodes_.resize(d, finite);
  values_.resize(finite);
  Eigen::Index k = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = table[static_cast<std::size_t>(i)];
    if (!std::isfinite(v)) continue;
    nodes_.col(k) = grid_.node(i);
    values_(k) = v;
    ++k;
  }

  // Forward differences between finite neighbours along each axis.
  const int m = grid_.points_per_axis();
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = table[static_cast<std::size_t>(i)];
    if (!std::isfinite(v)) continue;
    double sq = 0.0;
    std::int64_t stride = 1;
    std::int64_t rest = i;
    for (Eigen::Index axis = 0; axis < d; ++axis) {
      const int coord = static_cast<int>(rest % m);
      rest /= m;
      if (coord + 1 < m) {
        const double w = table[static_cast<std::size_t>(i + stride)];
        if (std::isfinite(w)) {
          const double g = (w - v) / grid_.step(axis);
          sq += g * g;
        }
      }
      stride *= m;
    }
    lipschitz_ = std::max(lipschitz_, std::sqrt(sq));
  }
}

double GridConjugator::operator()(const Vector& query) const {
  require_dim(query, grid_.dim(), "grid_conjugate query");
  if (values_.size() == 0) {
    throw ImproperRestriction("grid_conjugate: function is +inf on every grid node");
  }
  return (nodes_.transpose() * query - values_).maxCoeff();
}

double grid_conjugate(const JointFunction& f, const GridSpec& grid, const Vector& query) {
  return GridConjugator(f, grid)(query);
}

JointFunction as_joint(const BivariateFunction& f) {
  return [f](const Vector& z) { return f.joint(z); };
}

double grid_conjugate(const BivariateFunction& f, const GridSpec& grid, const Vector& query) {
  if (grid.dim() != 2 * f.dim()) throw DimensionError("grid_conjugate: grid must be 2n-dimensional");
  return grid_conjugate(as_joint(f), grid, query);
}

namespace {

Vector stack(const Vector& a, const Vector& b) {
  Vector z(a.size() + b.size());
  z << a, b;
  return z;
}

}  // namespace

AutoconjugacyReport autoconjugacy_residual(const BivariateFunction& f, const GridSpec& grid,
                                           const std::vector<PointPair>& test_points) {
  if (test_points.empty()) throw std::invalid_argument("autoconjugacy_residual: empty test set");
  if (grid.dim() != 2 * f.dim()) {
    throw DimensionError("autoconjugacy_residual: grid must be 2n-dimensional");
  }
  const JointFunction joint = as_joint(f);
  const GridConjugator conj(joint, grid);
  std::optional<GridConjugator> wide;

  AutoconjugacyReport report;
  report.error_bound = conj.error_bound();
  for (const auto& [x, xstar] : test_points) {
    const ExtReal direct = f(x, xstar);
    const Vector query = stack(xstar, x);
    const double c = conj(query);
    if (direct.is_finite()) {
      report.max_residual = std::max(report.max_residual, std::abs(c - direct.value()));
      ++report.finite_points;
      continue;
    }
    // +inf side: the true conjugate is +inf only if the sup keeps growing
    // as the box grows.
    if (!wide) wide.emplace(joint, grid.scaled(2.0));
    if ((*wide)(query) > c + grid.max_step()) {
      ++report.infinite_points;
    } else {
      report.one_sided.push_back({x, xstar});
    }
  }
  return report;
}

GraphSample extract_graph(const BivariateFunction& f, const GridSpec& grid, double tol) {
  if (grid.dim() != 2 * f.dim()) throw DimensionError("extract_graph: grid must be 2n-dimensional");
  const Eigen::Index n = f.dim();
  GraphSample sample;
  sample.tol = tol;
  sample.dim = n;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    const Vector z = grid.node(i);
    const ExtReal v = f.joint(z);
    if (v.is_infinite()) continue;
    const double r = v.value() - z.head(n).dot(z.tail(n));
    if (std::abs(r) <= tol) sample.pairs.push_back({z.head(n), z.tail(n), r});
  }
  return sample;
}

MonotoneAudit audit_monotone(const GraphSample& sample, double tol_pair) {
  MonotoneAudit audit;
  const auto& p = sample.pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const double ip = (p[i].x - p[j].x).dot(p[i].xstar - p[j].xstar);
      if (ip < audit.worst) {
        audit.worst = ip;
        audit.first = i;
        audit.second = j;
      }
    }
  }
  audit.monotone = audit.worst >= -tol_pair;
  return audit;
}

bool fenchel_young_check(const BivariateFunction& f, const std::vector<PointPair>& test_points,
                         double tol) {
  return std::all_of(test_points.begin(), test_points.end(), [&](const PointPair& pt) {
    const ExtReal v = f(pt.first, pt.second);
    return v.is_infinite() || v.value() >= pt.first.dot(pt.second) - tol;
  });
}

void write_graph_csv(std::ostream& out, const GraphSample& sample) {
  const Eigen::Index n = sample.pairs.empty() ? sample.dim : sample.pairs.front().x.size();
  for (Eigen::Index i = 0; i < n; ++i) out << "x" << i + 1 << ',';
  for (Eigen::Index i = 0; i < n; ++i) out << "xstar" << i + 1 << ',';
  out << "residual\n";
  for (const auto& gp : sample.pairs) {
    for (Eigen::Index i = 0; i < n; ++i) out << format_double(gp.x(i)) << ',';
    for (Eigen::Index i = 0; i < n; ++i) out << format_double(gp.xstar(i)) << ',';
    out << format_double(gp.residual) << '\n';
  }
}

}  // namespace autoconj
