#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "autoconj/fitzpatrick.hpp"
#include "autoconj/format.hpp"
#include "autoconj/matrix_io.hpp"
#include "autoconj/oracle.hpp"
#include "autoconj/representers.hpp"
#include "autoconj/scalar_gallery.hpp"
#include "suites.hpp"

namespace autoconj::cli {

namespace {

using nlohmann::json;

// Options shared by the subcommands. Unused fields stay at their defaults.
struct Config {
  std::string op_file;
  std::string op_inline;
  std::vector<std::string> points;
  std::string box = "-10:10";
  int m = 0;
  double tol = 0.0;
  std::string format = "json";
  std::string out_path;
  bool strict = false;
  std::string kind = "unified";
  std::string mode = "closed";
  bool neglog = false;
  // verify
  std::string suite;
  int n = 3;
  int trials = 20;
  // gallery
  std::string which = "Arep";
  bool sweep = false;
  std::string g = "energy";
  long long n_max = 1000000;
};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("bad number '" + tok + "' in " + what, 1, static_cast<int>(start) + 1);
    }
    out.push_back(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::pair<double, double> parse_box(const std::string& text) {
  const auto v = parse_list(text, ':', "--box");
  if (v.size() != 2) throw ParseError("--box expects lo:hi", 1, 1);
  if (!(v[0] < v[1])) throw BadInput("--box requires lo < hi");
  return {v[0], v[1]};
}

PointPair split_point(const std::vector<double>& v, Eigen::Index n, const std::string& what) {
  if (static_cast<Eigen::Index>(v.size()) != 2 * n) {
    throw DimensionError(what + " has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(2 * n) + " (x then x*)");
  }
  Vector x(n);
  Vector xs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) = v[static_cast<std::size_t>(i)];
    xs(i) = v[static_cast<std::size_t>(n + i)];
  }
  return {x, xs};
}

std::vector<PointPair> parse_points(const Config& c, Eigen::Index n) {
  if (c.points.empty()) throw BadInput("--point is required");
  std::vector<PointPair> out;
  for (const auto& p : c.points) out.push_back(split_point(parse_list(p, ',', "--point"), n, "--point " + p));
  return out;
}

Matrix load_operator(const Config& c) {
  if (!c.op_file.empty() && !c.op_inline.empty()) throw BadInput("give either --op or --matrix, not both");
  if (!c.op_inline.empty()) {
    std::string text = c.op_inline;
    for (char& ch : text)
      if (ch == ';') ch = '\n';
    return parse_matrix(text);
  }
  if (c.op_file.empty()) throw BadInput("an operator is required (--op FILE or --matrix ROWS)");
  return load_matrix(c.op_file);
}

json vec_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

// Writes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void require_format(const Config& c) {
  if (c.format != "json" && c.format != "csv") throw BadInput("--format must be json or csv");
}

EvalMode parse_mode(const std::string& mode) {
  if (mode == "closed" || mode == "collapsed") return EvalMode::Closed;
  if (mode == "numeric") return EvalMode::Numeric;
  throw BadInput("--mode must be closed, collapsed or numeric");
}

std::string csv_header(Eigen::Index n) {
  std::string h;
  for (Eigen::Index i = 1; i <= n; ++i) h += "x" + std::to_string(i) + ",";
  for (Eigen::Index i = 1; i <= n; ++i) h += "xstar" + std::to_string(i) + ",";
  return h;
}

std::string csv_point(const Vector& x, const Vector& xs) {
  std::string s;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += format_double(x(i)) + ",";
  for (Eigen::Index i = 0; i < xs.size(); ++i) s += format_double(xs(i)) + ",";
  return s;
}

int cmd_fitz(const Config& c, std::ostream& out) {
  require_format(c);
  const LinearMonotoneOperator a(load_operator(c));
  const auto pts = parse_points(c, a.dim());
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  if (c.format == "csv") os << csv_header(a.dim()) << "value,pairing,on_graph\n";
  for (const auto& [x, xs] : pts) {
    const ExtReal v = fitz_eval(a, x, xs);
    const bool g = on_graph(a.matrix(), x, xs);
    if (c.format == "csv") {
      os << csv_point(x, xs) << csv_cell(v) << "," << format_double(x.dot(xs)) << "," << (g ? "true" : "false")
         << "\n";
    } else {
      os << json{{"value", to_json(v)}, {"pairing", x.dot(xs)}, {"on_graph", g}}.dump() << "\n";
    }
  }
  return kOk;
}

RepResult eval_kind(const std::string& kind, const LinearMonotoneOperator& a, const Vector& x,
                    const Vector& xs, EvalMode mode, SearchBox box) {
  if (kind == "A") return a_rep_eval(a, x, xs, mode, box);
  if (kind == "B") return b_rep_eval(a, x, xs, mode, box);
  if (kind == "C") return {c_rep_eval(a, x, xs), std::nullopt};
  if (kind == "unified") return {unified_eval(a, x, xs), std::nullopt};
  throw BadInput("--kind must be A, B, C or unified");
}

int cmd_rep(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c);
  const EvalMode mode = parse_mode(c.mode);
  const auto [lo, hi] = parse_box(c.box);
  const LinearMonotoneOperator a(load_operator(c));
  const auto pts = parse_points(c, a.dim());
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  bool flagged = false;
  if (c.format == "csv") os << csv_header(a.dim()) << "value,boundary_hit,iterations\n";
  for (const auto& [x, xs] : pts) {
    const RepResult r = eval_kind(c.kind, a, x, xs, mode, {lo, hi});
    const bool hit = r.report && r.report->boundary_hit;
    flagged = flagged || hit;
    if (c.format == "csv") {
      os << csv_point(x, xs) << csv_cell(r.value) << "," << (hit ? "true" : "false") << ","
         << (r.report ? r.report->iterations : 0) << "\n";
      continue;
    }
    json rec{{"kind", c.kind}, {"value", to_json(r.value)}};
    json flags{{"boundary_hit", hit}, {"empty", r.report ? r.report->empty : false}};
    if (r.report) {
      rec["argmin"] = vec_json(r.report->argmin);
      rec["iterations"] = r.report->iterations;
      rec["certificate"] = r.report->certificate;
      flags["box"] = {r.report->box_lo, r.report->box_hi};
    }
    rec["flags"] = flags;
    os << rec.dump() << "\n";
  }
  if (flagged) {
    err << "warning: minimizer reached the search box boundary; the infimum may not be attained\n";
    if (c.strict) return kFailure;
  }
  return kOk;
}

// Largest pairwise difference among the values; +inf when finiteness disagrees.
ExtReal max_gap(const std::vector<ExtReal>& vals) {
  double gap = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t k = i + 1; k < vals.size(); ++k) {
      if (vals[i].is_finite() != vals[k].is_finite()) return kInf;
      if (vals[i].is_finite()) gap = std::max(gap, std::abs(vals[i].value() - vals[k].value()));
    }
  }
  return gap;
}

int cmd_compare(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.format != "csv") throw BadInput("compare emits csv only");
  const EvalMode mode = parse_mode(c.mode);
  const auto [lo, hi] = parse_box(c.box);
  const int m = c.m > 0 ? c.m : 5;
  std::optional<LinearMonotoneOperator> a;
  Eigen::Index n = 1;
  if (c.neglog) {
    if (!c.op_file.empty() || !c.op_inline.empty()) throw BadInput("--neglog takes no operator");
  } else {
    a.emplace(load_operator(c));
    n = a->dim();
  }
  const GridSpec grid = GridSpec::cube(2 * n, lo, hi, m);
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  os << csv_header(n) << "A,B,C,unified,maxgap\n";
  bool flagged = false;
  for (std::int64_t idx = 0; idx < grid.node_count(); ++idx) {
    const Vector z = grid.node(idx);
    const Vector x = z.head(n);
    const Vector xs = z.tail(n);
    std::vector<ExtReal> vals;
    ExtReal unified = kInf;
    if (c.neglog) {
      const RepResult b = neglog::brep_numeric(x(0), xs(0));
      flagged = flagged || (b.report && b.report->boundary_hit);
      vals = {neglog::value(neglog::Which::Arep, x(0), xs(0)), b.value,
              neglog::value(neglog::Which::SepRep, x(0), xs(0))};
    } else {
      const RepResult ar = a_rep_eval(*a, x, xs, mode);
      const RepResult br = b_rep_eval(*a, x, xs, mode);
      flagged = flagged || (ar.report && ar.report->boundary_hit) || (br.report && br.report->boundary_hit);
      unified = unified_eval(*a, x, xs);
      vals = {ar.value, br.value, c_rep_eval(*a, x, xs), unified};
    }
    os << csv_point(x, xs) << csv_cell(vals[0]) << "," << csv_cell(vals[1]) << "," << csv_cell(vals[2]) << ","
       << (c.neglog ? std::string() : csv_cell(unified)) << "," << csv_cell(max_gap(vals)) << "\n";
  }
  if (flagged) {
    err << "warning: some minimizations reached the search box boundary\n";
    if (c.strict) return kFailure;
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  std::optional<Matrix> op;
  if (!c.op_file.empty() || !c.op_inline.empty()) op = load_operator(c);
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suites::suite_names();
  } else {
    names = {c.suite};
  }
  bool all = true;
  for (const auto& name : names) {
    suites::SuiteResult r;
    if (name == "coincidence") {
      suites::CoincidenceConfig cfg;
      cfg.max_dim = c.n;
      cfg.trials = c.trials;
      if (cfg.max_dim < 1 || cfg.trials < 1) throw BadInput("--n and --trials must be positive");
      r = suites::coincidence(cfg);
    } else if (name == "rotation") {
      r = suites::rotation_forms();
    } else if (name == "autoconj") {
      r = suites::autoconj(op, c.m);
    } else if (name == "graph") {
      r = suites::graph(op);
    } else if (name == "neglog-domains") {
      r = suites::neglog_domains();
    } else if (name == "idfam") {
      r = suites::idfam();
    } else if (name == "sum-identity") {
      r = suites::sum_identity();
    } else if (name == "hoe") {
      r = suites::hoe();
    } else if (name == "truncation") {
      r = suites::truncation();
    } else {
      throw BadInput("unknown suite: " + name);
    }
    for (const auto& chk : r.checks)
      out << (chk.pass ? "PASS " : "FAIL ") << r.name << ": " << chk.name << " (" << chk.detail << ")\n";
    out << r.name << ": " << (r.pass() ? "pass" : "fail") << "\n";
    all = all && r.pass();
  }
  return all ? kOk : kFailure;
}

int cmd_gallery_neglog(const Config& c, std::ostream& out) {
  require_format(c);
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  if (c.sweep) {
    if (c.format != "csv") throw BadInput("--sweep emits csv only");
    const auto [lo, hi] = parse_box(c.box == "-10:10" ? std::string("0:3") : c.box);
    const int m = c.m > 0 ? c.m : 13;
    os << "x,xstar,Fitz,FitzConj,Arep,SepRep,in_dom_A,in_dom_B,in_dom_SepRep\n";
    const GridSpec grid = GridSpec::cube(2, lo, hi, m);
    for (std::int64_t idx = 0; idx < grid.node_count(); ++idx) {
      const Vector z = grid.node(idx);
      const double x = z(0);
      const double xs = -z(1);  // x* runs over the negative half-line
      using neglog::Which;
      using neglog::Domain;
      os << format_double(x) << "," << format_double(xs) << ","
         << csv_cell(neglog::value(Which::Fitz, x, xs)) << "," << csv_cell(neglog::value(Which::FitzConj, x, xs))
         << "," << csv_cell(neglog::value(Which::Arep, x, xs)) << ","
         << csv_cell(neglog::value(Which::SepRep, x, xs)) << ","
         << neglog::in_domain(Domain::Arep, x, xs) << "," << neglog::in_domain(Domain::Brep, x, xs) << ","
         << neglog::in_domain(Domain::SepRep, x, xs) << "\n";
    }
    return kOk;
  }
  const auto pts = parse_points(c, 1);
  const bool numeric_b = c.which == "Brep";
  const std::optional<neglog::Which> which =
      numeric_b ? std::nullopt : std::optional<neglog::Which>(neglog::parse_which(c.which));
  if (c.format == "csv") os << "x,xstar,value\n";
  bool flagged = false;
  for (const auto& [x, xs] : pts) {
    ExtReal v;
    if (numeric_b) {
      const RepResult r = neglog::brep_numeric(x(0), xs(0));
      v = r.value;
      flagged = flagged || (r.report && r.report->boundary_hit);
    } else {
      v = neglog::value(*which, x(0), xs(0));
    }
    if (c.format == "csv") {
      os << format_double(x(0)) << "," << format_double(xs(0)) << "," << csv_cell(v) << "\n";
    } else {
      os << json{{"which", c.which}, {"x", x(0)}, {"xstar", xs(0)}, {"value", to_json(v)}}.dump() << "\n";
    }
  }
  return flagged && c.strict ? kFailure : kOk;
}

int cmd_gallery_idfam(const Config& c, std::ostream& out) {
  require_format(c);
  const GSpec g = GSpec::parse(c.g);
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  std::vector<PointPair> pts;
  if (!c.points.empty()) {
    pts = parse_points(c, 1);
  } else {
    const auto [lo, hi] = parse_box(c.box == "-10:10" ? std::string("-2:2") : c.box);
    const GridSpec grid = GridSpec::cube(2, lo, hi, c.m > 0 ? c.m : 9);
    for (std::int64_t idx = 0; idx < grid.node_count(); ++idx) {
      const Vector z = grid.node(idx);
      pts.push_back({z.head(1), z.tail(1)});
    }
  }
  if (c.format == "csv") os << "x,y,value\n";
  for (const auto& [x, y] : pts) {
    const ExtReal v = id_family_eval(g, x(0), y(0));
    if (c.format == "csv") {
      os << format_double(x(0)) << "," << format_double(y(0)) << "," << csv_cell(v) << "\n";
    } else {
      os << json{{"g", g.name()}, {"x", x(0)}, {"y", y(0)}, {"value", to_json(v)}}.dump() << "\n";
    }
  }
  return kOk;
}

int cmd_gallery_l2demo(const Config& c, std::ostream& out) {
  require_format(c);
  const auto rows = energy_sequence_demo(c.n_max);
  Sink sink(c.out_path, out);
  auto& os = sink.stream();
  if (c.format == "csv") os << "n,partial_sum,tail_bound,ax_norm_sq\n";
  for (const auto& r : rows) {
    if (c.format == "csv") {
      os << r.n << "," << format_double(r.partial_sum) << "," << format_double(r.tail_bound) << ","
         << format_double(r.ax_norm_sq) << "\n";
    } else {
      os << json{{"n", r.n}, {"partial_sum", r.partial_sum}, {"tail_bound", r.tail_bound},
                 {"ax_norm_sq", r.ax_norm_sq}}
                .dump()
         << "\n";
    }
  }
  return kOk;
}

int cmd_graph(const Config& c, std::ostream& out, std::ostream& err) {
  const bool boxed = c.box != "-10:10";
  const auto [lo, hi] = parse_box(boxed ? c.box : std::string("-2:2"));
  BivariateFunction f = neglog::function(neglog::Which::Arep);
  double lam = 1.0;
  Eigen::Index n = 1;
  if (c.neglog) {
    // The operator default "unified" means A here.
    if (c.kind == "SepRep") {
      f = neglog::function(neglog::Which::SepRep);
    } else if (c.kind != "A" && c.kind != "unified") {
      throw BadInput("with --neglog, --kind must be A or SepRep");
    }
  } else {
    const LinearMonotoneOperator a(load_operator(c));
    n = a.dim();
    lam = std::max(1.0, a.symmetric_part().largest_eigenvalue());
    if (c.kind == "fitz") {
      f = fitzpatrick_function(a);
    } else if (c.kind == "C" || c.kind == "unified") {
      f = c.kind == "C" ? ghoussoub_representer(a) : unified_representer(a);
    } else {
      throw BadInput("--kind must be fitz, C or unified for graph extraction");
    }
  }
  if (n > 2) throw DimensionError("graph extraction supports n <= 2");
  const int m = c.m > 0 ? c.m : (n == 1 ? 241 : 17);
  const GridSpec grid = GridSpec::cube(2 * n, lo, hi, m);
  const double h = grid.max_step();
  const double tol = c.tol > 0 ? c.tol : 0.1 * h * h / lam;
  const GraphSample g = extract_graph(f, grid, tol);
  Sink sink(c.out_path, out);
  write_graph_csv(sink.stream(), g);
  const MonotoneAudit audit = audit_monotone(g, 1e-12);
  err << g.pairs.size() << " graph nodes; monotone audit: " << (audit.monotone ? "pass" : "fail");
  if (!audit.monotone) err << " (pair " << audit.first << ", " << audit.second << ": " << audit.worst << ")";
  err << "\n";
  return !audit.monotone && c.strict ? kFailure : kOk;
}

void add_operator(CLI::App* sub, Config& c) {
  sub->add_option("--op", c.op_file, "Operator file (JSON {\"n\",\"rows\"} or whitespace rows)");
  sub->add_option("--matrix", c.op_inline, "Inline operator, rows separated by ';'");
}

void add_output(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "json or csv")->capture_default_str();
  sub->add_option("--out", c.out_path, "Write records here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Autoconjugate representers of monotone operators", "autoconj"};
  app.require_subcommand(1);

  auto* fitz = app.add_subcommand("fitz", "Fitzpatrick function value and graph membership");
  add_operator(fitz, c);
  fitz->add_option("--point", c.points, "x...,xstar... (repeatable)");
  add_output(fitz, c);

  auto* rep = app.add_subcommand("rep", "Evaluate an autoconjugate representer");
  add_operator(rep, c);
  rep->add_option("--kind", c.kind, "A, B, C or unified")->capture_default_str();
  rep->add_option("--mode", c.mode, "closed (collapsed) or numeric")->capture_default_str();
  rep->add_option("--point", c.points, "x...,xstar... (repeatable)");
  rep->add_option("--box", c.box, "Search box lo:hi per axis")->capture_default_str();
  rep->add_flag("--strict", c.strict, "Exit 1 when a minimizer hits the box boundary");
  add_output(rep, c);

  auto* compare = app.add_subcommand("compare", "Sweep a point grid and compare A, B, C, unified");
  add_operator(compare, c);
  compare->add_flag("--neglog", c.neglog, "Use the -ln example (C column is f + f*)");
  compare->add_option("--box", c.box, "Sweep box lo:hi per axis")->capture_default_str();
  compare->add_option("--m", c.m, "Nodes per axis (default 5)");
  compare->add_option("--mode", c.mode, "closed or numeric")->capture_default_str();
  compare->add_flag("--strict", c.strict, "Exit 1 when a minimizer hits the box boundary");
  compare->add_option("--out", c.out_path, "Write CSV here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", c.suite, "coincidence, rotation, autoconj, graph, neglog-domains, idfam, "
                                       "sum-identity, hoe, truncation or all")
      ->required();
  add_operator(verify, c);
  verify->add_option("--n", c.n, "Largest dimension for random operators")->capture_default_str();
  verify->add_option("--trials", c.trials, "Random operators")->capture_default_str();
  verify->add_option("--m", c.m, "Grid nodes per axis");

  auto* gallery = app.add_subcommand("gallery", "Worked one-dimensional examples");
  gallery->require_subcommand(1);
  auto* neglog_cmd = gallery->add_subcommand("neglog", "f = -ln and its representers");
  neglog_cmd->add_option("--which", c.which, "f, fstar, Fitz, FitzConj, Arep, SepRep or Brep (numeric)")
      ->capture_default_str();
  neglog_cmd->add_option("--point", c.points, "x,xstar (repeatable)");
  neglog_cmd->add_flag("--sweep", c.sweep, "Tabulate values and domain membership (csv)");
  neglog_cmd->add_option("--box", c.box, "Sweep range lo:hi for x and -x* (default 0:3)");
  neglog_cmd->add_option("--m", c.m, "Sweep nodes per axis (default 13)");
  neglog_cmd->add_flag("--strict", c.strict, "Exit 1 when a minimizer hits the box boundary");
  add_output(neglog_cmd, c);
  auto* idfam_cmd = gallery->add_subcommand("idfam", "Autoconjugate representers of Id on R");
  idfam_cmd->add_option("--g", c.g, "halfline, energy or power:p")->capture_default_str();
  idfam_cmd->add_option("--point", c.points, "x,y (repeatable); sweeps a grid when absent");
  idfam_cmd->add_option("--box", c.box, "Sweep box lo:hi (default -2:2)");
  idfam_cmd->add_option("--m", c.m, "Sweep nodes per axis (default 9)");
  add_output(idfam_cmd, c);
  auto* l2 = gallery->add_subcommand("l2demo", "Bounded energy of truncated k^{-4/3} sequences");
  l2->add_option("--n", c.n_max, "Largest truncation")->capture_default_str();
  add_output(l2, c);

  auto* graph_cmd = app.add_subcommand("graph", "Extract the graph G(F) of a representer on a grid (csv)");
  add_operator(graph_cmd, c);
  graph_cmd->add_flag("--neglog", c.neglog, "Use the -ln representers");
  graph_cmd->add_option("--kind", c.kind, "fitz, C or unified (operators); A or SepRep (--neglog)")
      ->capture_default_str();
  graph_cmd->add_option("--box", c.box, "Grid box lo:hi per axis (default -2:2)");
  graph_cmd->add_option("--m", c.m, "Grid nodes per axis");
  graph_cmd->add_option("--tol", c.tol, "Equality tolerance (default 0.1 h^2 / max(1, lambda_max))");
  graph_cmd->add_flag("--strict", c.strict, "Exit 1 when the monotone audit fails");
  graph_cmd->add_option("--out", c.out_path, "Write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*fitz) return cmd_fitz(c, out);
    if (*rep) return cmd_rep(c, out, err);
    if (*compare) {
      c.format = "csv";
      return cmd_compare(c, out, err);
    }
    if (*verify) return cmd_verify(c, out);
    if (*neglog_cmd) return cmd_gallery_neglog(c, out);
    if (*idfam_cmd) return cmd_gallery_idfam(c, out);
    if (*l2) return cmd_gallery_l2demo(c, out);
    if (*graph_cmd) return cmd_graph(c, out, err);
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return kParseError;
  } catch (const DimensionError& e) {
    err << "dimension mismatch: " << e.what() << "\n";
    return kDimensionError;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace autoconj::cli
