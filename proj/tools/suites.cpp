#include "suites.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "autoconj/fitzpatrick.hpp"
#include "autoconj/oracle.hpp"
#include "autoconj/representers.hpp"
#include "autoconj/scalar_gallery.hpp"

namespace autoconj::suites {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

std::string measured(double value, double bound) { return sci(value) + " <= " + sci(bound); }

Vector uniform(std::mt19937_64& rng, Eigen::Index n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

Matrix gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

Matrix random_psd(std::mt19937_64& rng, Eigen::Index n, Eigen::Index rank) {
  if (rank == 0) return Matrix::Zero(n, n);
  const Matrix b = gaussian(rng, n, rank);
  return b * b.transpose() / static_cast<double>(rank);
}

Matrix random_monotone(std::mt19937_64& rng, Eigen::Index n, bool singular) {
  const Matrix s = singular ? random_psd(rng, n, n - 1)
                            : Matrix(random_psd(rng, n, n) + 0.2 * Matrix::Identity(n, n));
  const Matrix k = gaussian(rng, n, n);
  return s + 0.5 * (k - k.transpose());
}

// Half the points are arbitrary; the other half keep x* - Ax in ran A+ so
// that operators with a singular symmetric part also get finite values.
PointPair test_point(std::mt19937_64& rng, const LinearMonotoneOperator& a, int k) {
  const Eigen::Index n = a.dim();
  const Vector x = uniform(rng, n, -1, 1);
  if (k % 2 == 0) return {x, uniform(rng, n, -1, 1)};
  return {x, a.apply(x) + a.symmetric_part().matrix() * uniform(rng, n, -1, 1)};
}

double rel_gap(const ExtReal& v, const ExtReal& ref) {
  if (v.is_infinite() && ref.is_infinite()) return 0.0;
  if (v.is_infinite() || ref.is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(v.value() - ref.value()) / (1.0 + std::abs(ref.value()));
}

LinearMonotoneOperator scalar(double s) { return LinearMonotoneOperator(Matrix::Constant(1, 1, s)); }

// F restricted to the i-th coordinate axis in both variables.
BivariateFunction coordinate_slice(const BivariateFunction& f, Eigen::Index i) {
  const Eigen::Index n = f.dim();
  return BivariateFunction(
      [f, i, n](const Vector& t, const Vector& ts) {
        Vector x = Vector::Zero(n);
        Vector xs = Vector::Zero(n);
        x(i) = t(0);
        xs(i) = ts(0);
        return f(x, xs);
      },
      1, f.label() + "[" + std::to_string(i) + "]");
}

Check autoconj_check(const std::string& name, const BivariateFunction& f, const GridSpec& grid,
                     const std::vector<PointPair>& points) {
  const AutoconjugacyReport r = autoconjugacy_residual(f, grid, points);
  const bool ok = r.max_residual <= r.error_bound && r.one_sided.empty() && r.finite_points > 0;
  return {name, ok, "residual " + measured(r.max_residual, r.error_bound) + " over " +
                        std::to_string(r.finite_points) + " points"};
}

// Off-graph nodes of a representer of an integer matrix sit at least h^2 /
// (4 lambda_max) above the pairing, so this tolerance separates them.
double extraction_tol(const LinearMonotoneOperator& a, double h) {
  return 0.1 * h * h / std::max(1.0, a.symmetric_part().largest_eigenvalue());
}

Check graph_check(const std::string& name, const BivariateFunction& f, const LinearMonotoneOperator& a,
                  const GridSpec& grid) {
  const double h = grid.max_step();
  const GraphSample g = extract_graph(f, grid, extraction_tol(a, h));
  double worst = 0.0;
  for (const auto& p : g.pairs) worst = std::max(worst, (p.xstar - a.apply(p.x)).norm());
  const MonotoneAudit audit = audit_monotone(g, 1e-12);
  const bool ok = !g.pairs.empty() && worst <= 5 * h && audit.monotone;
  return {name, ok,
          std::to_string(g.pairs.size()) + " nodes, max |x* - Ax| " + measured(worst, 5 * h) +
              (audit.monotone ? ", monotone" : ", monotonicity violated")};
}

}  // namespace

bool SuiteResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::string SuiteResult::summary() const {
  std::string out;
  for (const auto& c : checks) {
    if (!out.empty()) out += "; ";
    out += c.name + (c.pass ? "" : " FAILED") + " (" + c.detail + ")";
  }
  return out;
}

SuiteResult coincidence(const CoincidenceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  double gap_a = 0.0;
  double gap_b = 0.0;
  double gap_c = 0.0;
  int finite = 0;
  int total = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Eigen::Index n = 1 + trial % cfg.max_dim;
    const LinearMonotoneOperator a(random_monotone(rng, n, trial % 4 == 3));
    for (int k = 0; k < cfg.points; ++k) {
      const auto [x, xs] = test_point(rng, a, k);
      const ExtReal u = unified_eval(a, x, xs);
      gap_a = std::max(gap_a, rel_gap(a_rep_eval(a, x, xs).value, u));
      gap_b = std::max(gap_b, rel_gap(b_rep_eval(a, x, xs, EvalMode::Numeric).value, u));
      gap_c = std::max(gap_c, rel_gap(c_rep_eval(a, x, xs), u));
      finite += u.is_finite() ? 1 : 0;
      ++total;
    }
  }
  SuiteResult s{"coincidence", {}};
  const std::string of = " over " + std::to_string(total) + " points (" + std::to_string(finite) + " finite)";
  s.checks.push_back({"A closed vs unified", gap_a <= 1e-8, measured(gap_a, 1e-8) + of});
  s.checks.push_back({"B numeric vs unified", gap_b <= 1e-6, measured(gap_b, 1e-6) + of});
  s.checks.push_back({"C vs unified", gap_c <= 1e-10, measured(gap_c, 1e-10) + of});
  return s;
}

SuiteResult rotation_forms() {
  std::mt19937_64 rng(60);
  Matrix j(2, 2);
  j << 0, -1, 1, 0;
  double worst = 0.0;
  for (double th : {0.0, std::numbers::pi / 6, std::numbers::pi / 3}) {
    const LinearMonotoneOperator a(rotation(th));
    const double c = std::cos(th);
    for (int k = 0; k < 25; ++k) {
      const Vector x = uniform(rng, 2, -2, 2);
      const Vector xs = uniform(rng, 2, -2, 2);
      const double u = unified_eval(a, x, xs).value();
      const double first = (xs - a.apply(x)).squaredNorm() / (2 * c) + x.dot(xs);
      const double second = (xs - std::sin(th) * j * x).squaredNorm() / (2 * c) + 0.5 * c * x.squaredNorm();
      worst = std::max({worst, std::abs(u - first) / (1 + std::abs(first)),
                        std::abs(u - second) / (1 + std::abs(second))});
    }
  }
  return {"rotation", {{"unified vs both closed forms", worst <= 1e-10,
                        measured(worst, 1e-10) + " over 75 points"}}};
}

SuiteResult autoconj(const std::optional<Matrix>& op, int m) {
  SuiteResult s{"autoconj", {}};
  if (op) {
    const LinearMonotoneOperator a(*op);
    const Eigen::Index n = a.dim();
    if (n > 2) throw DimensionError("verify autoconj: grid oracle supports n <= 2");
    if (m <= 0) m = n == 1 ? 241 : 21;
    const GridSpec grid = GridSpec::cube(2 * n, -3, 3, m);
    std::mt19937_64 rng(3);
    std::vector<PointPair> pts;
    for (int k = 0; k < 16; ++k) {
      // Small points keep the conjugate's maximizer inside the box.
      const Vector x = uniform(rng, n, -0.5, 0.5);
      const Vector xs = a.apply(x) + a.symmetric_part().matrix() * uniform(rng, n, -0.5, 0.5);
      pts.push_back({x, xs});
    }
    s.checks.push_back(autoconj_check("C_A", ghoussoub_representer(a), grid, pts));
    return s;
  }
  const GridSpec grid = GridSpec::cube(2, -3, 3, m > 0 ? m : 241);
  // Off the grid nodes, so maximizers of the conjugate fall between nodes.
  const double coords[] = {-1.13, -0.57, 0.0, 0.41, 1.07};
  std::vector<PointPair> pts;
  for (double x : coords)
    for (double xs : coords) pts.push_back({Vector::Constant(1, x), Vector::Constant(1, xs)});
  s.checks.push_back(autoconj_check("Id", ghoussoub_representer(scalar(1)), grid, pts));
  Matrix d(2, 2);
  d << 1, 0, 0, 2;
  const BivariateFunction cd = ghoussoub_representer(LinearMonotoneOperator(d));
  s.checks.push_back(autoconj_check("diag(1,2) slice 1", coordinate_slice(cd, 0), grid, pts));
  s.checks.push_back(autoconj_check("diag(1,2) slice 2", coordinate_slice(cd, 1), grid, pts));
  s.checks.push_back(autoconj_check("scalar 2", ghoussoub_representer(scalar(2)), grid, pts));
  return s;
}

SuiteResult graph(const std::optional<Matrix>& op) {
  SuiteResult s{"graph", {}};
  std::vector<Matrix> ops;
  if (op) {
    ops.push_back(*op);
  } else {
    for (double v : {0.5, 1.0, 2.0}) ops.push_back(Matrix::Constant(1, 1, v));
    Matrix m(2, 2);
    m << 1, -1, 1, 1;
    ops.push_back(m);
    m << 0, -1, 1, 0;
    ops.push_back(m);
    m << 2, 1, 1, 1;
    ops.push_back(m);
    m << 1, 0, 0, 2;
    ops.push_back(m);
  }
  for (const Matrix& m : ops) {
    const LinearMonotoneOperator a(m);
    if (a.dim() > 2) throw DimensionError("verify graph: grid oracle supports n <= 2");
    const GridSpec grid = a.dim() == 1 ? GridSpec::cube(2, -3, 3, 241) : GridSpec::cube(4, -2, 2, 17);
    std::ostringstream label;
    label << "[" << m.format(Eigen::IOFormat(Eigen::StreamPrecision, Eigen::DontAlignCols, ",", ";")) << "]";
    s.checks.push_back(graph_check("F_A " + label.str(), fitzpatrick_function(a), a, grid));
    s.checks.push_back(graph_check("C_A " + label.str(), ghoussoub_representer(a), a, grid));
  }
  return s;
}

SuiteResult neglog_domains() {
  using namespace neglog;
  SuiteResult s{"neglog-domains", {}};

  // Exact classification against the defining inequalities on a sweep.
  bool exact_ok = true;
  int swept = 0;
  for (int i = -8; i <= 24; ++i) {
    for (int k = -24; k <= 8; ++k) {
      const double x = i * 0.125;
      const double xs = k * 0.125;
      const bool pos = x > 0;
      exact_ok = exact_ok && in_domain(Domain::Arep, x, xs) == (pos && xs <= -1 / (2 * x)) &&
                 in_domain(Domain::Brep, x, xs) == (pos && xs <= -1 / (4 * x)) &&
                 in_domain(Domain::SepRep, x, xs) == (pos && xs < 0) &&
                 value(Which::Arep, x, xs).is_finite() == in_domain(Domain::Arep, x, xs) &&
                 value(Which::SepRep, x, xs).is_finite() == in_domain(Domain::SepRep, x, xs);
      ++swept;
    }
  }
  s.checks.push_back({"exact domains", exact_ok, std::to_string(swept) + " sweep points"});

  const Classification a1 = classify(Domain::Arep, 1, -1.0 / 3);
  const Classification b1 = classify(Domain::Brep, 1, -1.0 / 3, true);
  const Classification b2 = classify(Domain::Brep, 1, -0.2, true);
  const Classification s2 = classify(Domain::SepRep, 1, -0.2);
  const bool witnesses = !a1.exact && b1.exact && b1.numeric.value_or(false) && !b2.exact &&
                         !b2.numeric.value_or(true) && s2.exact;
  s.checks.push_back({"witnesses (1,-1/3) and (1,-0.2)", witnesses,
                      "(1,-1/3) in dom B \\ dom A, (1,-0.2) in dom(f+f*) \\ dom B; numeric B agrees"});

  double worst = 0.0;
  int count = 0;
  for (double x : {0.5, 0.75, 1.0, 1.5, 2.0, 3.0}) {
    for (double extra : {0.05, 0.2, 0.5, 1.0, 2.0}) {
      const double xs = -1 / (2 * x) - extra;
      const RepResult r = arep_numeric(x, xs);
      worst = std::max(worst, rel_gap(r.value, value(Which::Arep, x, xs)));
      ++count;
    }
  }
  s.checks.push_back({"A closed vs numeric", worst <= 1e-6,
                      measured(worst, 1e-6) + " over " + std::to_string(count) + " interior points"});

  const ExtReal fitz = value(Which::Fitz, 1, -1);
  s.checks.push_back({"Fitz(1,-1) = -1", fitz == ExtReal(-1.0), "value " + sci(fitz.to_double())});
  return s;
}

SuiteResult idfam() {
  SuiteResult s{"idfam", {}};
  const GSpec gs[] = {GSpec::halfline(), GSpec::energy(), GSpec::power(3.0)};
  const GridSpec line = GridSpec::cube(1, -4, 4, 2001);
  const GridSpec grid = GridSpec::cube(2, -3, 3, 241);
  const double h = grid.max_step();
  const double coords[] = {-1.13, -0.57, 0.0, 0.41, 1.07};

  for (const GSpec& g : gs) {
    const GAxiomReport ax = g_axiom_check(g, line);
    s.checks.push_back({"g axioms " + g.name(), ax.pass(), "conjugate gap " + measured(ax.max_conjugate_gap, ax.error_bound)});
    // The half-line indicator has the domain edge x = y; keep 2h away from it.
    const bool edged = g.kind == GSpec::Kind::IndicatorHalfLine;
    std::vector<PointPair> pts;
    for (double x : coords)
      for (double y : coords)
        if (!edged || std::abs(x - y) >= 2 * h) pts.push_back({Vector::Constant(1, x), Vector::Constant(1, y)});
    const BivariateFunction f = id_family_function(g);
    s.checks.push_back(autoconj_check("F_" + g.name() + " autoconjugate", f, grid, pts));
    const GraphSample gr = extract_graph(f, grid, 0.1 * h * h);
    double worst = 0.0;
    for (const auto& p : gr.pairs) worst = std::max(worst, std::abs(p.x(0) - p.xstar(0)));
    s.checks.push_back({"F_" + g.name() + " graph", !gr.pairs.empty() && worst <= 2 * h,
                        std::to_string(gr.pairs.size()) + " nodes, max |x - y| " + measured(worst, 2 * h)});
  }

  double min_pair = std::numeric_limits<double>::infinity();
  const double probe_x = 1.0;
  const double probe_y = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      min_pair = std::min(min_pair, std::abs(id_family_eval(gs[i], probe_x, probe_y).value() -
                                             id_family_eval(gs[k], probe_x, probe_y).value()));
  s.checks.push_back({"pairwise distinct at (1,0)", min_pair > 0.1, "smallest gap " + sci(min_pair) + " > 0.1"});
  return s;
}

SuiteResult sum_identity(int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult s{"sum-identity", {}};
  double worst = 0.0;
  bool ok = true;
  int points = 0;
  std::size_t hits = 0;
  // Near-singular A+ + B+ can put the minimizing y* well outside [-10, 10].
  const SearchBox box{-100.0, 100.0};
  for (int p = 0; p < pairs; ++p) {
    const Eigen::Index n = 1 + p % 3;
    const LinearMonotoneOperator a(random_monotone(rng, n, p % 3 == 2));
    const LinearMonotoneOperator b(random_monotone(rng, n, false));
    std::vector<PointPair> pts;
    for (int k = 0; k < 10; ++k) pts.push_back(test_point(rng, a, k));
    const SumIdentityReport r = ghoussoub_sum_identity(a, b, pts, 1e-6, box);
    ok = ok && r.pass;
    hits += r.boundary_hits;
    worst = std::max(worst, r.max_gap);
    points += static_cast<int>(r.points);
  }
  s.checks.push_back({"C_A [] C_B = C_{A+B}", ok,
                      measured(worst, 1e-6) + " over " + std::to_string(pairs) + " pairs, " +
                          std::to_string(points) + " points, " + std::to_string(hits) +
                          " boundary hits"});

  int exact = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Index n = 1 + k % 3;
    const LinearMonotoneOperator a(random_monotone(rng, n, k % 4 == 1));
    const LinearMonotoneOperator sym(a.symmetric_part().matrix());
    const BivariateFunction sheared = shear_rep(ghoussoub_representer(sym), a.antisymmetric_part());
    const auto [x, xs] = test_point(rng, a, k);
    if (sheared(x, xs) == c_rep_eval(a, x, xs)) ++exact;
  }
  s.checks.push_back({"shear consistency", exact == 100, std::to_string(exact) + "/100 bit-exact"});
  return s;
}

SuiteResult hoe(int operators, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult s{"hoe", {}};
  bool all = true;
  bool rejected = true;
  double worst = 0.0;
  for (int k = 0; k < operators; ++k) {
    const Eigen::Index n = 1 + k % 3;
    const Matrix sym = random_psd(rng, n, k % 2 == 0 ? n : n - 1);
    const LinearMonotoneOperator a(0.5 * (sym + sym.transpose()));
    std::vector<PointPair> pairs;
    for (int i = 0; i < 50; ++i) pairs.push_back({uniform(rng, n, -2, 2), uniform(rng, n, -2, 2)});
    const BivariateFunction c = ghoussoub_representer(a);
    const HoeVerdict v = hoe_symmetry_check(a, c, pairs, 1e-9);
    all = all && v.pass();
    worst = std::max(worst, v.worst_exchange_gap);
    rejected = rejected && !hoe_symmetry_check(a, add_constant(c, 0.1), pairs, 1e-9).pass();
  }
  s.checks.push_back({"C_A passes", all, "worst exchange gap " + measured(worst, 1e-9)});
  s.checks.push_back({"C_A + 0.1 rejected", rejected, rejected ? "rejected for every operator" : "accepted"});
  return s;
}

SuiteResult truncation(long long n_max) {
  SuiteResult s{"truncation", {}};
  std::mt19937_64 rng(9);
  bool agree = true;
  double worst = 0.0;
  for (int n : {2, 5, 10}) {
    for (int k = 0; k < 20; ++k) {
      const TruncationValues v = diag_truncation_reps(n, uniform(rng, n, -2, 2), uniform(rng, n, -2, 2));
      agree = agree && v.coincide;
      worst = std::max(worst, rel_gap(v.a_rep, v.b_rep));
    }
  }
  s.checks.push_back({"q_A + q_B = q_B* + q_B", agree && worst <= 1e-10, measured(worst, 1e-10) + " for n = 2, 5, 10"});

  const auto rows = energy_sequence_demo(n_max);
  bool monotone = true;
  bool consistent = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    monotone = monotone && rows[i].partial_sum > rows[i - 1].partial_sum;
    consistent = consistent &&
                 rows[i].partial_sum - rows[i - 1].partial_sum <= rows[i - 1].tail_bound + rows[i].tail_bound;
  }
  s.checks.push_back({"energy partial sums", monotone && consistent,
                      "S_" + std::to_string(rows.back().n) + " = " + sci(rows.back().partial_sum) +
                          (monotone ? ", increasing" : ", not increasing") +
                          (consistent ? ", within tail bounds" : ", tail bound violated")});
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"coincidence", "rotation", "autoconj",
                                                  "graph",       "neglog-domains", "idfam",
                                                  "sum-identity", "hoe",     "truncation"};
  return names;
}

}  // namespace autoconj::suites
