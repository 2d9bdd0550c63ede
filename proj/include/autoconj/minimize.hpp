#pragma once

#include <functional>

#include "autoconj/ext_real.hpp"
#include "autoconj/linear_operator.hpp"

// Derivative-free minimization of convex extended-valued objectives over a
// box. Convexity is assumed, not checked: the domain of the objective is
// taken to be convex (an interval along every line) and the objective to be
// unimodal along every line.

namespace autoconj {

using Objective = std::function<ExtReal(const Vector&)>;

struct MinimizeOptions {
  /// Line searches stop once the bracket is narrower than this.
  double tol_x = 1e-9;
  /// Probe nodes per line search. Domain slices narrower than the probe
  /// spacing can be missed.
  int probes = 41;
  /// Probe nodes per axis for picking Powell starting points.
  int start_probes = 5;
  /// Minimizers closer than this to a box face count as boundary hits.
  double boundary_margin = 1e-3;
  /// Retry once on a box doubled about its center after a boundary hit.
  bool expand_once = true;
  /// Use nested exact line minimizations instead of Powell in 2-D. Slower,
  /// but does not stall at kinks of nonsmooth objectives.
  bool nested_2d = false;
  int max_cycles = 100;
};

struct MinimizerReport {
  Vector argmin;
  ExtReal objective = kInf;
  /// Objective evaluations.
  int iterations = 0;
  /// Final bracket width (line searches) or last step length (Powell).
  double certificate = 0.0;
  /// The minimizer sits within boundary_margin of the search box.
  bool boundary_hit = false;
  /// No probe node had a finite objective; objective is +inf.
  bool empty = false;
  /// Search box actually used, after any expansion.
  double box_lo = 0.0;
  double box_hi = 0.0;

  bool attained() const { return !boundary_hit; }
};

/// Minimizes f over [lo, hi]^dim. dim = 0 evaluates f at the empty vector.
MinimizerReport minimize_convex(const Objective& f, Eigen::Index dim, double lo, double hi,
                                const MinimizeOptions& options = {});

/// One-dimensional core, exposed for tests.
struct LineResult {
  double t = 0.0;
  ExtReal value = kInf;
  double width = 0.0;
};
LineResult minimize_line(const std::function<ExtReal(double)>& f, double lo, double hi,
                         const MinimizeOptions& options, int& evaluations);

}  // namespace autoconj
