#include "autoconj/scalar_gallery.hpp"

#include <cmath>
#include <stdexcept>

#include "autoconj/oracle.hpp"

namespace autoconj {

GSpec GSpec::power(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("GSpec::power: exponent must exceed 1");
  return {Kind::PowerPair, p};
}

GSpec GSpec::parse(const std::string& text) {
  if (text == "halfline") return halfline();
  if (text == "energy") return energy();
  if (text.rfind("power:", 0) == 0) {
    std::size_t used = 0;
    const std::string num = text.substr(6);
    double p = 0.0;
    try {
      p = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size()) throw std::invalid_argument("bad power exponent: " + num);
    return power(p);
  }
  throw std::invalid_argument("unknown g: " + text + " (expected halfline, energy or power:p)");
}

ExtReal GSpec::operator()(double x) const {
  switch (kind) {
    case Kind::IndicatorHalfLine:
      return x >= 0.0 ? ExtReal(0.0) : kInf;
    case Kind::Energy:
      return 0.5 * x * x;
    case Kind::PowerPair: {
      if (x >= 0.0) return std::pow(x, p) / p;
      const double q = conjugate_exponent();
      return std::pow(-x, q) / q;
    }
  }
  return kInf;
}

std::string GSpec::name() const {
  switch (kind) {
    case Kind::IndicatorHalfLine: return "halfline";
    case Kind::Energy: return "energy";
    case Kind::PowerPair: {
      std::string s = std::to_string(p);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return "power:" + s;
    }
  }
  return "?";
}

ExtReal id_family_eval(const GSpec& g, double x, double y) {
  const double s = (x + y) / std::sqrt(2.0);
  const double d = (x - y) / std::sqrt(2.0);
  return ExtReal(0.5 * s * s) + g(d);
}

BivariateFunction id_family_function(const GSpec& g) {
  return BivariateFunction(
      [g](const Vector& x, const Vector& y) { return id_family_eval(g, x(0), y(0)); }, 1,
      "F_" + g.name());
}

GAxiomReport g_axiom_check(const GSpec& g, const GridSpec& grid, double interior_fraction) {
  if (grid.dim() != 1) throw DimensionError("g_axiom_check: grid must be one-dimensional");
  GAxiomReport report;
  report.zero_at_origin = g(0.0) == ExtReal(0.0);

  const JointFunction gj = [&g](const Vector& v) { return g(v(0)); };
  const GridConjugator conj(gj, grid);
  report.error_bound = conj.error_bound();
  std::optional<GridConjugator> wide;

  const double center = 0.5 * (grid.lower()(0) + grid.upper()(0));
  const double half = 0.5 * (grid.upper()(0) - grid.lower()(0)) * interior_fraction;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    const double x = grid.node(i)(0);
    const ExtReal gx = g(x);
    if (gx.is_finite() && gx.value() < 0.0) report.nonnegative = false;
    if (std::abs(x - center) > half) continue;

    const Vector query = Vector::Constant(1, -x);
    const double c = conj(query);
    if (gx.is_finite()) {
      const double gap = std::abs(c - gx.value());
      report.max_conjugate_gap = std::max(report.max_conjugate_gap, gap);
      if (gap > report.error_bound + 1e-12) report.conjugate_matches = false;
    } else {
      if (!wide) wide.emplace(gj, grid.scaled(2.0));
      if (!((*wide)(query) > c + grid.max_step())) report.conjugate_matches = false;
    }
  }
  return report;
}

namespace neglog {

Which parse_which(const std::string& text) {
  if (text == "f") return Which::F;
  if (text == "fstar") return Which::FStar;
  if (text == "Fitz") return Which::Fitz;
  if (text == "FitzConj") return Which::FitzConj;
  if (text == "Arep") return Which::Arep;
  if (text == "SepRep") return Which::SepRep;
  throw std::invalid_argument("unknown -ln item: " + text +
                              " (expected f, fstar, Fitz, FitzConj, Arep or SepRep)");
}

std::string to_string(Which w) {
  switch (w) {
    case Which::F: return "f";
    case Which::FStar: return "fstar";
    case Which::Fitz: return "Fitz";
    case Which::FitzConj: return "FitzConj";
    case Which::Arep: return "Arep";
    case Which::SepRep: return "SepRep";
  }
  return "?";
}

ExtReal f(double x) {
  if (x <= 0.0) return kInf;
  return -std::log(x);
}

ExtReal fstar(double s) { return ExtReal(-1.0) + f(-s); }

bool in_c(double x, double xstar) { return x > 0.0 && xstar <= -1.0 / x; }

namespace {

// Rounding can push the radicand of a boundary point slightly below zero.
double clamped_sqrt(double v) {
  if (v < 0.0 && v >= -1e-12) return 0.0;
  return std::sqrt(v);
}

}  // namespace

ExtReal value(Which which, double x, double xstar) {
  switch (which) {
    case Which::F:
      return f(x);
    case Which::FStar:
      return fstar(xstar);
    case Which::Fitz:
      if (x >= 0.0 && xstar <= 0.0) return 1.0 - 2.0 * clamped_sqrt(-x * xstar);
      return kInf;
    case Which::FitzConj:
      return in_c(x, xstar) ? ExtReal(-1.0) : kInf;
    case Which::Arep:
      if (in_domain(Domain::Arep, x, xstar)) return 0.0 - clamped_sqrt(-1.0 - 2.0 * x * xstar);  // +0 on the boundary
      return kInf;
    case Which::SepRep:
      return f(x) + fstar(xstar);
  }
  return kInf;
}

BivariateFunction function(Which which) {
  return BivariateFunction(
      [which](const Vector& x, const Vector& xs) { return value(which, x(0), xs(0)); }, 1,
      "neglog_" + to_string(which));
}

bool in_domain(Domain which, double x, double xstar) {
  if (!(x > 0.0)) return false;
  switch (which) {
    case Domain::Arep: return xstar <= -1.0 / (2.0 * x);
    case Domain::Brep: return xstar <= -1.0 / (4.0 * x);
    case Domain::SepRep: return xstar < 0.0;
  }
  return false;
}

Classification classify(Domain which, double x, double xstar, bool cross_check) {
  Classification c;
  c.exact = in_domain(which, x, xstar);
  if (cross_check && which == Domain::Brep) c.numeric = brep_numeric(x, xstar).value.is_finite();
  return c;
}

RepResult arep_numeric(double x, double xstar, SearchBox box) {
  MinimizeOptions opts;
  opts.probes = 401;
  return a_rep_numeric(function(Which::Fitz), function(Which::FitzConj), Vector::Constant(1, x),
                       Vector::Constant(1, xstar), box, opts);
}

RepResult brep_numeric(double x, double xstar, SearchBox box) {
  MinimizeOptions opts;
  opts.nested_2d = true;
  opts.probes = 401;
  return b_rep_numeric(function(Which::Fitz), function(Which::FitzConj), Vector::Constant(1, x),
                       Vector::Constant(1, xstar), box, opts);
}

}  // namespace neglog

TruncationValues diag_truncation_reps(int n, const Vector& x, const Vector& xstar, double tol) {
  if (n < 1) throw std::invalid_argument("diag_truncation_reps: n must be >= 1");
  require_dim(x, n, "diag_truncation_reps x");
  require_dim(xstar, n, "diag_truncation_reps x*");
  Vector a_diag(n);
  Vector b_diag(n);
  for (int k = 1; k <= n; ++k) {
    a_diag(k - 1) = k;
    b_diag(k - 1) = 1.0 / k;
  }
  const QuadraticForm qa(a_diag.asDiagonal().toDenseMatrix());
  const QuadraticForm qb(b_diag.asDiagonal().toDenseMatrix());
  TruncationValues v;
  v.a_rep = ExtReal(qa.eval(x)) + ExtReal(qb.eval(xstar));
  v.b_rep = qb.conjugate(x) + ExtReal(qb.eval(xstar));
  v.coincide = ext_close(v.a_rep, v.b_rep, tol);
  return v;
}

std::vector<EnergyRow> energy_sequence_demo(long long n_max) {
  if (n_max < 1) throw std::invalid_argument("energy_sequence_demo: n_max must be >= 1");
  std::vector<EnergyRow> rows;
  long double s = 0.0L;
  long double ax = 0.0L;
  long long next = 1;
  for (long long k = 1; k <= n_max; ++k) {
    const long double kk = static_cast<long double>(k);
    s += std::pow(kk, -5.0L / 3.0L);
    ax += std::pow(kk, -2.0L / 3.0L);
    if (k == next || k == n_max) {
      rows.push_back({k, static_cast<double>(s),
                      1.5 * std::pow(static_cast<double>(k), -2.0 / 3.0), static_cast<double>(ax)});
      if (k == next) next *= 10;
    }
  }
  return rows;
}

}  // namespace autoconj
