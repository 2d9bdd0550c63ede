#pragma once

#include <vector>

#include "autoconj/bivariate.hpp"
#include "autoconj/linear_operator.hpp"
#include "autoconj/oracle.hpp"

namespace autoconj {

/// F_A(x, x*) = 1/2 q*_{A+}(x* + A^T x).
///
/// For antisymmetric A (A+ = 0) this is the indicator of x* = A x, which is
/// what q* of the zero form gives once the range test is applied.
ExtReal fitz_eval(const LinearMonotoneOperator& a, const Vector& x, const Vector& xstar);

/// F_A*(x*, x) = <x, A x> on gra A, +inf elsewhere.
ExtReal fitz_conjugate_eval(const LinearMonotoneOperator& a, const Vector& xstar, const Vector& x);

/// sup over the sample of <x, y*> + <y, x*> - <y, y*>: a lower bound on
/// F_A(x, x*) for any A whose graph contains the sample. Throws
/// std::invalid_argument on an empty sample.
double fitz_sampled(const std::vector<PointPair>& graph_points, const Vector& x, const Vector& xstar);

/// F_A as a bivariate function.
BivariateFunction fitzpatrick_function(const LinearMonotoneOperator& a);

/// (x, x*) -> F_A*(x*, x), i.e. F_A^{*T}.
BivariateFunction fitzpatrick_conjugate_transpose(const LinearMonotoneOperator& a);

/// Indicator of gra M for a square matrix M.
BivariateFunction graph_indicator(const Matrix& m);

/// ||x* - A x|| <= kRange * (1 + ||x*||).
bool on_graph(const Matrix& a, const Vector& x, const Vector& xstar);

}  // namespace autoconj
