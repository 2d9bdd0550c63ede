#include "autoconj/representers.hpp"

#include <cmath>
#include <stdexcept>

#include "autoconj/fitzpatrick.hpp"

namespace autoconj {

std::string_view to_string(RepresenterKind kind) {
  switch (kind) {
    case RepresenterKind::PenotZalinescu: return "PenotZalinescu";
    case RepresenterKind::ProximalAverage: return "ProximalAverage";
    case RepresenterKind::Ghoussoub: return "Ghoussoub";
    case RepresenterKind::Unified: return "Unified";
    case RepresenterKind::Indicator: return "Indicator";
    case RepresenterKind::Separable: return "Separable";
    case RepresenterKind::Shear: return "Shear";
    case RepresenterKind::PartialInfConv: return "PartialInfConv";
  }
  return "?";
}

namespace {

// point + span(basis), basis with orthonormal columns.
struct AffineSet {
  Vector point;
  Matrix basis;
  bool empty = false;
};

AffineSet whole_space(Eigen::Index n) { return {Vector::Zero(n), Matrix::Identity(n, n), false}; }

double svd_cutoff(const Eigen::JacobiSVD<Matrix>& svd) {
  const auto& s = svd.singularValues();
  return 1e-10 * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
}

Matrix orthonormal_range(const Matrix& d) {
  if (d.cols() == 0) return Matrix(d.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeThinU);
  const double cut = svd_cutoff(svd);
  Eigen::Index r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix null_space(const Matrix& m) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const double cut = svd_cutoff(svd);
  Eigen::Index r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > cut) ++r;
  return svd.matrixV().rightCols(cols - r);
}

// Restricts s to points that also lie in p + span(dirs).
void intersect(AffineSet& s, const Vector& p, const Matrix& dirs) {
  if (s.empty) return;
  const Eigen::Index n = p.size();
  const Matrix d = orthonormal_range(dirs);
  const Matrix q = Matrix::Identity(n, n) - d * d.transpose();
  const Matrix m = q * s.basis;
  const Vector r = q * (p - s.point);
  const double slack = tol::kRange * (1.0 + p.norm() + s.point.norm());
  if (m.cols() == 0) {
    s.empty = r.norm() > slack;
    return;
  }
  const Vector a0 = m.completeOrthogonalDecomposition().solve(r);
  if ((m * a0 - r).norm() > slack) {
    s.empty = true;
    return;
  }
  s.point += s.basis * a0;
  s.basis = s.basis * null_space(m);
}

RepResult minimize_over(const AffineSet& set, const std::function<ExtReal(const Vector&)>& objective,
                        SearchBox box, const MinimizeOptions& options) {
  if (set.empty) {
    MinimizerReport rep;
    rep.argmin = set.point;
    rep.empty = true;
    rep.box_lo = box.lo;
    rep.box_hi = box.hi;
    return {kInf, rep};
  }
  const auto param = [&](const Vector& t) -> ExtReal { return objective(set.point + set.basis * t); };
  MinimizerReport rep = minimize_convex(param, set.basis.cols(), box.lo, box.hi, options);
  rep.argmin = set.point + set.basis * rep.argmin;
  return {rep.objective, rep};
}

void check_point(Eigen::Index n, const Vector& x, const Vector& xstar, const char* what) {
  require_dim(x, n, what);
  require_dim(xstar, n, what);
}

}  // namespace

ExtReal c_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar) {
  check_point(a.dim(), x, xstar, "c_rep_eval");
  const QuadraticForm& q = a.symmetric_part();
  return ExtReal(q.eval(x)) + q.conjugate(xstar - a.antisymmetric_part() * x);
}

ExtReal unified_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar) {
  check_point(a.dim(), x, xstar, "unified_eval");
  return ExtReal(x.dot(xstar)) + a.symmetric_part().conjugate(xstar - a.matrix() * x);
}

RepResult a_rep_numeric(const BivariateFunction& f, const BivariateFunction& f_star_t,
                        const Vector& x, const Vector& xstar, SearchBox box,
                        const MinimizeOptions& options) {
  const Eigen::Index n = f.dim();
  if (f_star_t.dim() != n) throw DimensionError("a_rep_numeric: F and F^{*T} dimensions differ");
  check_point(n, x, xstar, "a_rep_numeric");
  AffineSet set = whole_space(n);
  if (const auto& s = f.slice()) intersect(set, s->shift * x - xstar, s->directions);
  if (const auto& s = f_star_t.slice()) intersect(set, xstar - s->shift * x, s->directions);
  const auto objective = [&](const Vector& ystar) -> ExtReal {
    return 0.5 * f(x, xstar + ystar) + 0.5 * f_star_t(x, xstar - ystar);
  };
  return minimize_over(set, objective, box, options);
}

RepResult a_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar,
                     EvalMode mode, SearchBox box, const MinimizeOptions& options) {
  check_point(a.dim(), x, xstar, "a_rep_eval");
  if (mode == EvalMode::Numeric) {
    return a_rep_numeric(fitzpatrick_function(a), fitzpatrick_conjugate_transpose(a), x, xstar, box,
                         options);
  }
  const Vector ax = a.matrix() * x;
  return {0.5 * fitz_eval(a, x, 2.0 * xstar - ax) + ExtReal(a.symmetric_part().eval(x)), std::nullopt};
}

RepResult b_rep_numeric(const BivariateFunction& f, const BivariateFunction& f_star_t,
                        const Vector& x, const Vector& xstar, SearchBox box,
                        const MinimizeOptions& options) {
  const Eigen::Index n = f.dim();
  if (f_star_t.dim() != n) throw DimensionError("b_rep_numeric: F and F^{*T} dimensions differ");
  check_point(n, x, xstar, "b_rep_numeric");

  // y* = offset(y) + basis * u
  Matrix shift = Matrix::Zero(n, n);
  Matrix basis = Matrix::Identity(n, n);
  bool sliced = false;
  if (const auto& s = f_star_t.slice()) {
    // x* - y* in S (x - y) + span(D)  =>  y* = x* - S (x - y) - D u
    shift = s->shift;
    basis = -orthonormal_range(s->directions);
    sliced = true;
  }
  const Eigen::Index k = basis.cols();
  const auto split = [&](const Vector& v, Vector& y, Vector& ystar) {
    y = v.head(n);
    ystar = basis * v.tail(k);
    if (sliced) ystar += xstar - shift * (x - y);
  };
  const auto objective = [&](const Vector& v) -> ExtReal {
    Vector y;
    Vector ystar;
    split(v, y, ystar);
    const double quad = 0.5 * y.squaredNorm() + 0.5 * ystar.squaredNorm();
    return 0.5 * f(x + y, xstar + ystar) + 0.5 * f_star_t(x - y, xstar - ystar) + ExtReal(quad);
  };
  MinimizerReport rep = minimize_convex(objective, n + k, box.lo, box.hi, options);
  Vector y;
  Vector ystar;
  split(rep.argmin, y, ystar);
  rep.argmin.resize(2 * n);
  rep.argmin << y, ystar;
  return {rep.objective, rep};
}

RepResult b_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar,
                     EvalMode mode, SearchBox box, const MinimizeOptions& options) {
  check_point(a.dim(), x, xstar, "b_rep_eval");
  if (mode == EvalMode::Numeric) {
    return b_rep_numeric(fitzpatrick_function(a), fitzpatrick_conjugate_transpose(a), x, xstar, box,
                         options);
  }
  const Matrix& m = a.matrix();
  const QuadraticForm& q = a.symmetric_part();
  const auto objective = [&](const Vector& y) -> ExtReal {
    const Vector diff = x - y;
    const Vector forced = xstar - m * diff;  // x* - y* on gra A
    return 0.5 * fitz_eval(a, x + y, xstar + forced) +
           ExtReal(q.eval(diff) + 0.5 * y.squaredNorm() + 0.5 * forced.squaredNorm());
  };
  MinimizerReport rep = minimize_convex(objective, a.dim(), box.lo, box.hi, options);
  return {rep.objective, rep};
}

RepResult partial_inf_conv(const BivariateFunction& f1, const BivariateFunction& f2,
                           const Vector& x, const Vector& xstar, SearchBox box,
                           const MinimizeOptions& options) {
  const Eigen::Index n = f1.dim();
  if (f2.dim() != n) throw DimensionError("partial_inf_conv: dimensions differ");
  check_point(n, x, xstar, "partial_inf_conv");
  AffineSet set = whole_space(n);
  if (const auto& s = f1.slice()) intersect(set, s->shift * x, s->directions);
  if (const auto& s = f2.slice()) intersect(set, xstar - s->shift * x, s->directions);
  const auto objective = [&](const Vector& ystar) -> ExtReal {
    return f1(x, ystar) + f2(x, xstar - ystar);
  };
  return minimize_over(set, objective, box, options);
}

BivariateFunction shear_rep(const BivariateFunction& f1, const Matrix& a2) {
  if (a2.rows() != f1.dim() || a2.cols() != f1.dim()) throw DimensionError("shear_rep: size mismatch");
  if (!is_antisymmetric(a2)) throw std::invalid_argument("shear_rep: operator is not antisymmetric");
  std::optional<DualSlice> slice;
  if (const auto& s = f1.slice()) slice = DualSlice{s->shift + a2, s->directions};
  return BivariateFunction(
      [f1, a2](const Vector& x, const Vector& xs) { return f1(x, xs - a2 * x); }, f1.dim(),
      "shear(" + f1.label() + ")", std::move(slice));
}

BivariateFunction ghoussoub_representer(const LinearMonotoneOperator& a) {
  DualSlice slice{a.antisymmetric_part(), a.symmetric_part().range_basis()};
  return BivariateFunction([a](const Vector& x, const Vector& xs) { return c_rep_eval(a, x, xs); },
                           a.dim(), "C_A", std::move(slice));
}

BivariateFunction unified_representer(const LinearMonotoneOperator& a) {
  DualSlice slice{a.antisymmetric_part(), a.symmetric_part().range_basis()};
  return BivariateFunction([a](const Vector& x, const Vector& xs) { return unified_eval(a, x, xs); },
                           a.dim(), "unified_A", std::move(slice));
}

BivariateFunction separable_quadratic(const QuadraticForm& q) {
  DualSlice slice{Matrix::Zero(q.dim(), q.dim()), q.range_basis()};
  return BivariateFunction(
      [q](const Vector& x, const Vector& xs) { return ExtReal(q.eval(x)) + q.conjugate(xs); },
      q.dim(), "q(+)q*", std::move(slice));
}

SumIdentityReport ghoussoub_sum_identity(const LinearMonotoneOperator& a,
                                         const LinearMonotoneOperator& b,
                                         const std::vector<PointPair>& test_points, double tol,
                                         SearchBox box) {
  if (a.dim() != b.dim()) throw DimensionError("ghoussoub_sum_identity: dimensions differ");
  const LinearMonotoneOperator sum(a.matrix() + b.matrix());
  const BivariateFunction ca = ghoussoub_representer(a);
  const BivariateFunction cb = ghoussoub_representer(b);
  SumIdentityReport report;
  for (const auto& [x, xs] : test_points) {
    const RepResult r = partial_inf_conv(ca, cb, x, xs, box);
    const ExtReal conv = r.value;
    if (r.report && r.report->boundary_hit) ++report.boundary_hits;
    const ExtReal direct = c_rep_eval(sum, x, xs);
    ++report.points;
    if (!ext_close(conv, direct, tol)) report.pass = false;
    if (conv.is_finite() && direct.is_finite()) {
      report.max_gap = std::max(report.max_gap, std::abs(conv.value() - direct.value()) /
                                                    (1.0 + std::abs(direct.value())));
    } else if (conv.is_finite() != direct.is_finite()) {
      report.max_gap = std::numeric_limits<double>::infinity();
    }
  }
  return report;
}

HoeVerdict hoe_symmetry_check(const LinearMonotoneOperator& a, const BivariateFunction& f,
                              const std::vector<PointPair>& pairs, double tol,
                              const std::optional<GridSpec>& autoconj_grid) {
  const Matrix& m = a.matrix();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + a.norm())) {
    throw std::invalid_argument("hoe_symmetry_check: operator is not symmetric");
  }
  if (f.dim() != a.dim()) throw DimensionError("hoe_symmetry_check: dimensions differ");
  const Eigen::Index n = a.dim();
  HoeVerdict verdict;

  const ExtReal origin = f(Vector::Zero(n), Vector::Zero(n));
  verdict.origin_value = origin.to_double();
  verdict.zero_at_origin = origin.is_finite() && std::abs(origin.value()) <= tol;

  for (const auto& [x, y] : pairs) {
    const ExtReal lhs = f(x, m * y);
    const ExtReal rhs = f(y, m * x);
    double gap = 0.0;
    if (lhs.is_finite() && rhs.is_finite()) {
      gap = std::abs(lhs.value() - rhs.value()) / (1.0 + std::abs(rhs.value()));
    } else if (lhs.is_finite() != rhs.is_finite()) {
      gap = std::numeric_limits<double>::infinity();
    }
    verdict.worst_exchange_gap = std::max(verdict.worst_exchange_gap, gap);
  }
  verdict.exchange_symmetric = verdict.worst_exchange_gap <= tol;

  if (autoconj_grid && n == 1) {
    const GridSpec& g = *autoconj_grid;
    std::vector<PointPair> pts;
    const double h = g.max_step();
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double u = g.lower()(0) + (g.upper()(0) - g.lower()(0)) * (0.3 + 0.1 * i);
        const double v = g.lower()(1) + (g.upper()(1) - g.lower()(1)) * (0.3 + 0.1 * j);
        pts.push_back({Vector::Constant(1, u), Vector::Constant(1, v)});
      }
    }
    const AutoconjugacyReport rep = autoconjugacy_residual(f, g, pts);
    verdict.autoconjugate = rep.one_sided.empty() && rep.max_residual <= std::max(rep.error_bound, h);
  }
  return verdict;
}

}  // namespace autoconj
