#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoconj/bivariate.hpp"
#include "autoconj/grid.hpp"
#include "autoconj/representers.hpp"

// Worked one-dimensional examples: a family of distinct autoconjugate
// representers for the identity on R, the subdifferential of -ln where the
// Penot-Zalinescu, proximal-average and separable representers differ, and
// finite diagonal truncations of a discontinuous operator on l2.

namespace autoconj {

/// g with g*(-x) = g(x) >= 0.
struct GSpec {
  enum class Kind { IndicatorHalfLine, Energy, PowerPair };
  Kind kind = Kind::Energy;
  double p = 3.0;  // PowerPair only

  static GSpec halfline() { return {Kind::IndicatorHalfLine, 3.0}; }
  static GSpec energy() { return {Kind::Energy, 3.0}; }
  /// Throws std::invalid_argument unless p > 1.
  static GSpec power(double p);
  /// "halfline", "energy" or "power:p".
  static GSpec parse(const std::string& text);

  double conjugate_exponent() const { return p / (p - 1.0); }
  ExtReal operator()(double x) const;
  std::string name() const;
};

/// F(x, y) = q((x + y)/sqrt 2) + g((x - y)/sqrt 2), q = |.|^2 / 2.
ExtReal id_family_eval(const GSpec& g, double x, double y);
BivariateFunction id_family_function(const GSpec& g);

struct GAxiomReport {
  bool nonnegative = true;
  bool zero_at_origin = true;
  bool conjugate_matches = true;
  double max_conjugate_gap = 0.0;
  double error_bound = 0.0;
  bool pass() const { return nonnegative && zero_at_origin && conjugate_matches; }
};

/// Checks g >= 0 on the grid nodes, g(0) = 0 exactly, and grid_conjugate(g)(-x)
/// = g(x) within the grid error at interior points. For points where g is
/// +inf the grid conjugate must keep growing as the box is doubled.
/// interior_fraction restricts the tested points to the central part of the
/// box, where the conjugate's maximizer stays inside the grid.
GAxiomReport g_axiom_check(const GSpec& g, const GridSpec& grid, double interior_fraction = 0.5);

/// f = -ln on (0, inf), +inf elsewhere.
namespace neglog {

enum class Which { F, FStar, Fitz, FitzConj, Arep, SepRep };
enum class Domain { Arep, Brep, SepRep };

Which parse_which(const std::string& text);
std::string to_string(Which w);

ExtReal f(double x);
/// f*(s) = -1 + f(-s).
ExtReal fstar(double s);
/// (x, x*) in C = { x* <= -1/x < 0 }.
bool in_c(double x, double xstar);

/// Fitz is F_{df}; FitzConj is F_{df}^{*T} = -1 + iota_C; Arep is
/// -sqrt(-1 - 2 x x*) on C / sqrt 2; SepRep is f(x) + f*(x*).
ExtReal value(Which which, double x, double xstar);
BivariateFunction function(Which which);

/// Exact membership tests for C / sqrt 2, C / 2 and (0, inf) x (-inf, 0).
bool in_domain(Domain which, double x, double xstar);

struct Classification {
  bool exact = false;
  /// Finiteness of the numerically minimized proximal-average value;
  /// only computed for Domain::Brep when requested.
  std::optional<bool> numeric;
};
Classification classify(Domain which, double x, double xstar, bool cross_check = false);

/// Penot-Zalinescu representer minimized numerically from Fitz and FitzConj.
RepResult arep_numeric(double x, double xstar, SearchBox box = {-10.0, 10.0});
/// Proximal-average representer; no closed form is known.
RepResult brep_numeric(double x, double xstar, SearchBox box = {-5.0, 5.0});

}  // namespace neglog

struct TruncationValues {
  ExtReal a_rep;  // q_A(x) + q_B(x*)
  ExtReal b_rep;  // q_B^*(x) + q_B(x*)
  bool coincide = false;
};

/// B = diag(1/k), A = B^{-1} = diag(k), k = 1..n.
TruncationValues diag_truncation_reps(int n, const Vector& x, const Vector& xstar, double tol = 1e-10);

struct EnergyRow {
  long long n = 0;
  /// sum_{k <= n} k^{-5/3} = <x_n, A x_n> for x_k = k^{-4/3}.
  double partial_sum = 0.0;
  /// (3/2) n^{-2/3} >= S_inf - S_n.
  double tail_bound = 0.0;
  /// ||A x_n||^2 = sum_{k <= n} k^{-2/3}, which diverges.
  double ax_norm_sq = 0.0;
};

/// Rows at n = 1, 10, 100, ... and n_max. Throws std::invalid_argument for n_max < 1.
std::vector<EnergyRow> energy_sequence_demo(long long n_max);

}  // namespace autoconj
