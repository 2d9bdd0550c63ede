#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "autoconj/bivariate.hpp"
#include "autoconj/linear_operator.hpp"
#include "autoconj/minimize.hpp"
#include "autoconj/oracle.hpp"

// Autoconjugate representers of monotone operators.
//
//   A  (Penot-Zalinescu)   inf_{y*} 1/2 F(x, x*+y*) + 1/2 F^{*T}(x, x*-y*)
//   B  (proximal average)  inf_{y,y*} 1/2 F(x+y, x*+y*) + 1/2 F^{*T}(x-y, x*-y*)
//                                      + 1/2 ||y||^2 + 1/2 ||y*||^2
//   C  (Ghoussoub)         q_{A+}(x) + q*_{A+}(x* - A_o x)
//
// with F the Fitzpatrick function. For continuous linear monotone A all
// three equal <x, x*> + q*_{A+}(x* - A x), which is what unified_eval
// computes directly.

namespace autoconj {

enum class RepresenterKind {
  PenotZalinescu,
  ProximalAverage,
  Ghoussoub,
  Unified,
  Indicator,
  Separable,
  Shear,
  PartialInfConv,
};

std::string_view to_string(RepresenterKind kind);

enum class EvalMode { Closed, Numeric };

/// Per-axis search interval for the numeric constructions.
struct SearchBox {
  double lo = -10.0;
  double hi = 10.0;
};

struct RepResult {
  ExtReal value = kInf;
  /// Present for numerically minimized values.
  std::optional<MinimizerReport> report;
};

ExtReal c_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar);
ExtReal unified_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar);

/// Closed mode: 1/2 F_A(x, 2x* - A x) + q_{A+}(x). Numeric mode: minimizes
/// over y* using the Fitzpatrick function and its conjugate transpose.
RepResult a_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar,
                     EvalMode mode = EvalMode::Closed, SearchBox box = {},
                     const MinimizeOptions& options = {});

/// inf_{y*} 1/2 f(x, x*+y*) + 1/2 f_star_t(x, x*-y*) for arbitrary F and
/// F^{*T} evaluators.
RepResult a_rep_numeric(const BivariateFunction& f, const BivariateFunction& f_star_t,
                        const Vector& x, const Vector& xstar, SearchBox box = {},
                        const MinimizeOptions& options = {});

/// Collapsed mode (linear A): the graph indicator inside F_A^{*T} forces
/// y* = x* - A(x - y), leaving a minimization over y alone. Numeric mode
/// runs b_rep_numeric on F_A and F_A^{*T}.
RepResult b_rep_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar,
                     EvalMode mode = EvalMode::Closed, SearchBox box = {},
                     const MinimizeOptions& options = {});

/// Joint minimization over (y, y*). When f_star_t carries a dual slice, y*
/// is parametrized over it so that graph-indicator terms stay feasible.
RepResult b_rep_numeric(const BivariateFunction& f, const BivariateFunction& f_star_t,
                        const Vector& x, const Vector& xstar, SearchBox box = {},
                        const MinimizeOptions& options = {});

/// inf_{y*} F1(x, y*) + F2(x, x* - y*).
RepResult partial_inf_conv(const BivariateFunction& f1, const BivariateFunction& f2,
                           const Vector& x, const Vector& xstar, SearchBox box = {},
                           const MinimizeOptions& options = {});

/// (x, x*) -> F1(x, x* - A2 x). Throws std::invalid_argument unless A2 is
/// antisymmetric.
BivariateFunction shear_rep(const BivariateFunction& f1, const Matrix& a2);

BivariateFunction ghoussoub_representer(const LinearMonotoneOperator& a);
BivariateFunction unified_representer(const LinearMonotoneOperator& a);
/// q_S (+) q_S^*, the Ghoussoub representer of a symmetric operator S.
BivariateFunction separable_quadratic(const QuadraticForm& q);

struct SumIdentityReport {
  bool pass = true;
  double max_gap = 0.0;
  std::size_t points = 0;
  /// Points where the minimization over y* ended on the search-box boundary.
  std::size_t boundary_hits = 0;
};

/// Checks partial_inf_conv(C_A, C_B) == C_{A+B} at every test point.
SumIdentityReport ghoussoub_sum_identity(const LinearMonotoneOperator& a,
                                         const LinearMonotoneOperator& b,
                                         const std::vector<PointPair>& test_points,
                                         double tol = 1e-6, SearchBox box = {});

struct HoeVerdict {
  bool zero_at_origin = true;
  bool exchange_symmetric = true;
  /// Only decided for n = 1 when a grid is supplied.
  std::optional<bool> autoconjugate;
  double origin_value = 0.0;
  double worst_exchange_gap = 0.0;

  bool pass() const { return zero_at_origin && exchange_symmetric && autoconjugate.value_or(true); }
};

/// Tests F(0,0) = 0 and F(x, Ay) = F(y, Ax) on the given (x, y) pairs, and
/// autoconjugacy on the grid when provided. Requires symmetric A.
HoeVerdict hoe_symmetry_check(const LinearMonotoneOperator& a, const BivariateFunction& f,
                              const std::vector<PointPair>& pairs, double tol = 1e-9,
                              const std::optional<GridSpec>& autoconj_grid = std::nullopt);

}  // namespace autoconj
