#include "autoconj/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace autoconj {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double width_tol(const MinimizeOptions& o, double a, double b) {
  return o.tol_x * std::max({1.0, std::abs(a), std::abs(b)});
}

// Last finite point between a finite point and an infinite one. The domain
// of a convex function is convex, so finiteness switches exactly once.
double domain_edge(const std::function<ExtReal(double)>& f, double infinite_at, double finite_at,
                   const MinimizeOptions& o, int& evals) {
  for (int it = 0; it < 200; ++it) {
    if (std::abs(finite_at - infinite_at) <= 1e-3 * width_tol(o, finite_at, infinite_at)) break;
    const double mid = 0.5 * (finite_at + infinite_at);
    ++evals;
    if (f(mid).is_finite()) {
      finite_at = mid;
    } else {
      infinite_at = mid;
    }
  }
  return finite_at;
}

bool near_face(const Vector& p, double lo, double hi, double margin) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) - lo < margin || hi - p(i) < margin) return true;
  }
  return false;
}

struct PointValue {
  Vector x;
  ExtReal value = kInf;
  double step = 0.0;
};

// Exact line minimization along dir from x, staying inside the box.
PointValue line_search(const Objective& f, const PointValue& from, const Vector& dir, double lo,
                       double hi, const MinimizeOptions& o, int& evals) {
  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < dir.size(); ++j) {
    if (dir(j) == 0.0) continue;
    double t1 = (lo - from.x(j)) / dir(j);
    double t2 = (hi - from.x(j)) / dir(j);
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
  }
  if (!(tmax > tmin)) return from;
  tmin = std::min(tmin, 0.0);
  tmax = std::max(tmax, 0.0);
  const auto along = [&](double t) -> ExtReal { return f(from.x + t * dir); };
  const LineResult r = minimize_line(along, tmin, tmax, o, evals);
  if (r.value < from.value) return {from.x + r.t * dir, r.value, std::abs(r.t) * dir.norm()};
  return {from.x, from.value, 0.0};
}

PointValue powell(const Objective& f, PointValue start, double lo, double hi,
                  const MinimizeOptions& o, int& evals) {
  const Eigen::Index n = start.x.size();
  Matrix dirs = Matrix::Identity(n, n);
  PointValue cur = std::move(start);
  bool restarted = false;
  for (int cycle = 0; cycle < o.max_cycles; ++cycle) {
    const PointValue begin = cur;
    double biggest = 0.0;
    Eigen::Index biggest_idx = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const PointValue next = line_search(f, cur, dirs.col(i), lo, hi, o, evals);
      const double drop = cur.value.is_finite() && next.value.is_finite()
                              ? cur.value.value() - next.value.value()
                              : 0.0;
      if (drop > biggest) {
        biggest = drop;
        biggest_idx = i;
      }
      cur = next;
    }
    Vector d = cur.x - begin.x;
    const double dn = d.norm();
    if (dn > 0.0) {
      d /= dn;
      cur = line_search(f, cur, d, lo, hi, o, evals);
      dirs.col(biggest_idx) = d;
    }
    cur.step = (cur.x - begin.x).norm();
    const double fv = cur.value.is_finite() ? cur.value.value() : 0.0;
    const double gain = begin.value.is_finite() && cur.value.is_finite()
                            ? begin.value.value() - cur.value.value()
                            : 0.0;
    const bool stalled = gain <= 1e-15 * (1.0 + std::abs(fv)) &&
                         cur.step <= o.tol_x * std::max(1.0, cur.x.norm());
    if (stalled) {
      if (restarted) break;
      dirs = Matrix::Identity(n, n);
      restarted = true;
    } else {
      restarted = false;
    }
  }
  return cur;
}

MinimizerReport run_box(const Objective& f, Eigen::Index dim, double lo, double hi,
                        const MinimizeOptions& o) {
  MinimizerReport rep;
  rep.box_lo = lo;
  rep.box_hi = hi;
  int evals = 0;

  if (dim == 1) {
    const auto g = [&](double t) -> ExtReal { return f(Vector::Constant(1, t)); };
    const LineResult r = minimize_line(g, lo, hi, o, evals);
    rep.argmin = Vector::Constant(1, r.t);
    rep.objective = r.value;
    rep.certificate = r.width;
    rep.empty = r.value.is_infinite();
  } else if (dim == 2 && o.nested_2d) {
    const auto inner = [&](double y0, int& ev) {
      const auto g = [&](double y1) -> ExtReal {
        Vector p(2);
        p << y0, y1;
        return f(p);
      };
      return minimize_line(g, lo, hi, o, ev);
    };
    const auto outer = [&](double y0) -> ExtReal { return inner(y0, evals).value; };
    const LineResult r = minimize_line(outer, lo, hi, o, evals);
    const LineResult in = inner(r.t, evals);
    rep.argmin = Vector(2);
    rep.argmin << r.t, in.t;
    rep.objective = in.value;
    rep.certificate = std::max(r.width, in.width);
    rep.empty = in.value.is_infinite();
  } else {
    // Starting points: best nodes of a coarse probe grid, plus the center.
    const int per_axis = dim > 4 ? 3 : std::max(3, o.start_probes);
    std::int64_t count = 1;
    for (Eigen::Index i = 0; i < dim; ++i) count *= per_axis;
    std::vector<PointValue> starts;
    PointValue best_probe;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Vector p(dim);
      std::int64_t rest = idx;
      for (Eigen::Index i = 0; i < dim; ++i) {
        p(i) = lo + (hi - lo) * static_cast<double>(rest % per_axis) / (per_axis - 1);
        rest /= per_axis;
      }
      const ExtReal v = f(p);
      ++evals;
      if (v < best_probe.value) best_probe = {p, v, 0.0};
    }
    if (best_probe.value.is_infinite()) {
      rep.argmin = Vector::Constant(dim, 0.5 * (lo + hi));
      rep.empty = true;
    } else {
      starts.push_back(best_probe);
      const Vector center = Vector::Constant(dim, 0.5 * (lo + hi));
      const ExtReal vc = f(center);
      ++evals;
      if (vc.is_finite()) starts.push_back({center, vc, 0.0});
      PointValue best;
      for (const auto& s : starts) {
        PointValue r = powell(f, s, lo, hi, o, evals);
        if (best.value.is_infinite() || r.value < best.value) best = std::move(r);
      }
      rep.argmin = best.x;
      rep.objective = best.value;
      rep.certificate = best.step;
    }
  }
  rep.iterations = evals;
  rep.boundary_hit = !rep.empty && near_face(rep.argmin, lo, hi, o.boundary_margin);
  return rep;
}

}  // namespace

LineResult minimize_line(const std::function<ExtReal(double)>& f, double lo, double hi,
                         const MinimizeOptions& o, int& evals) {
  if (!(hi > lo)) throw std::invalid_argument("minimize_line: empty interval");
  const int count = std::max(3, o.probes);
  std::vector<double> t(static_cast<std::size_t>(count));
  std::vector<ExtReal> v(static_cast<std::size_t>(count));
  int best = -1;
  for (int k = 0; k < count; ++k) {
    t[k] = k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1);
    v[k] = f(t[k]);
    ++evals;
    if (v[k].is_finite() && (best < 0 || v[k] < v[best])) best = k;
  }
  if (best < 0) return {0.5 * (lo + hi), kInf, hi - lo};

  // Convexity puts the minimizer between the neighbours of the best probe.
  double a = best > 0 ? t[best - 1] : t[best];
  double b = best < count - 1 ? t[best + 1] : t[best];
  if (best > 0 && v[best - 1].is_infinite()) a = domain_edge(f, t[best - 1], t[best], o, evals);
  if (best < count - 1 && v[best + 1].is_infinite()) b = domain_edge(f, t[best + 1], t[best], o, evals);

  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  ExtReal fc = f(c);
  ExtReal fd = f(d);
  evals += 2;
  while (b - a > width_tol(o, a, b)) {
    if (fc.is_infinite() && fd.is_infinite()) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }

  LineResult out{t[best], v[best], b - a};
  for (double cand : {0.5 * (a + b), a, b}) {
    const ExtReal fv = f(cand);
    ++evals;
    if (fv < out.value) {
      out.t = cand;
      out.value = fv;
    }
  }
  return out;
}

MinimizerReport minimize_convex(const Objective& f, Eigen::Index dim, double lo, double hi,
                                const MinimizeOptions& options) {
  if (!(hi > lo)) throw std::invalid_argument("minimize_convex: box must satisfy lo < hi");
  if (dim == 0) {
    MinimizerReport rep;
    rep.argmin = Vector(0);
    rep.objective = f(rep.argmin);
    rep.iterations = 1;
    rep.empty = rep.objective.is_infinite();
    rep.box_lo = lo;
    rep.box_hi = hi;
    return rep;
  }
  MinimizerReport rep = run_box(f, dim, lo, hi, options);
  if ((rep.empty || rep.boundary_hit) && options.expand_once) {
    const double center = 0.5 * (lo + hi);
    const double half = hi - lo;
    MinimizerReport wide = run_box(f, dim, center - half, center + half, options);
    wide.iterations += rep.iterations;
    rep = std::move(wide);
  }
  return rep;
}

}  // namespace autoconj
