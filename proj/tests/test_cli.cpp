#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "autoconj/format.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using autoconj::ExtReal;
using nlohmann::json;
namespace cli = autoconj::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AUTOCONJ_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path("autoconj_test_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: documented examples") {
  Run r = run({"rep", "--kind", "unified", "--op", data("id2.json"), "--point", "1,0,0,0"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["value"] == 0.5);

  r = run({"fitz", "--op", data("id1.json"), "--point", "1,1"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["value"] == 1.0);
  CHECK(json::parse(r.out)["on_graph"] == true);

  r = run({"gallery", "neglog", "--which", "Arep", "--point", "1,-1"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["value"] == -1.0);
}

TEST_CASE("cli: rep kinds agree on the rotation example") {
  for (const char* kind : {"A", "B", "C", "unified"}) {
    for (const char* mode : {"closed", "numeric"}) {
      const Run r = run({"rep", "--kind", kind, "--mode", mode, "--op", data("rot60.json"), "--point", "1,0,0,0"});
      CAPTURE(kind);
      CAPTURE(mode);
      REQUIRE(r.code == cli::kOk);
      CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
  const Run b = run({"rep", "--kind", "B", "--mode", "numeric", "--op", data("rot60.json"), "--point", "1,0,0,0"});
  const json rec = json::parse(b.out);
  CHECK(rec.contains("argmin"));
  CHECK(rec["flags"]["boundary_hit"] == false);
}

TEST_CASE("cli: +inf serializes as \"inf\" in JSON and an empty CSV cell") {
  Run r = run({"rep", "--kind", "C", "--op", data("quarter_turn.txt"), "--point", "1,0,0,0"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["value"] == "inf");

  r = run({"fitz", "--op", data("quarter_turn.txt"), "--point", "1,0,0,0", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "x1,x2,xstar1,xstar2,value,pairing,on_graph");
  CHECK(ls[1] == "1,0,0,0,,0,false");
}

TEST_CASE("cli: JSON records re-parse bit-exactly") {
  const Run r = run({"rep", "--kind", "unified", "--op", data("rot60.json"), "--point", "0.1,0.3,-0.7,1.9",
                     "--point", "1e-7,2,3,4.5"});
  REQUIRE(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  for (const auto& l : ls) {
    const json rec = json::parse(l);
    const ExtReal v = autoconj::ext_from_json(rec["value"]);
    CHECK(json::parse(rec.dump()) == rec);
    CHECK(autoconj::ext_from_json(json::parse(rec.dump())["value"]) == v);
  }
  // The printed digits are the shortest round trip of the computed double.
  const double direct = 0.5 * 0.5 + 0.0;
  CHECK(std::stod(autoconj::format_double(direct)) == direct);
}

TEST_CASE("cli: exit codes") {
  CHECK(run({"rep", "--kind", "C", "--op", data("id2.json"), "--point", "1,2,3"}).code == cli::kDimensionError);
  CHECK(run({"rep", "--kind", "C", "--op", data("id2.json"), "--point", "1,2,x,4"}).code == cli::kParseError);
  CHECK(run({"rep", "--kind", "Z", "--op", data("id2.json"), "--point", "1,2,3,4"}).code == cli::kParseError);
  CHECK(run({"rep", "--bogus"}).code == cli::kParseError);
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"rep", "--kind", "C", "--op", "does-not-exist.json", "--point", "1,1"}).code != cli::kOk);

  const TempFile bad("bad.txt", "1 0\n0 x\n");
  const Run r = run({"fitz", "--op", bad.path, "--point", "1,1,1,1"});
  CHECK(r.code == cli::kParseError);
  CHECK(r.err.find("line 2, column 3") != std::string::npos);

  const TempFile ragged("ragged.json", R"({"n": 2, "rows": [[1, 0], [0]]})");
  CHECK(run({"fitz", "--op", ragged.path, "--point", "1,1,1,1"}).code == cli::kParseError);

  const TempFile neg("neg.txt", "-1 0\n0 1\n");
  CHECK(run({"fitz", "--op", neg.path, "--point", "1,1,1,1"}).code == cli::kParseError);
}

TEST_CASE("cli: --strict turns a boundary hit into exit 1") {
  // A far-away x* pushes the numeric minimizer to the edge of a tiny box.
  const std::vector<std::string> base = {"rep",   "--kind",  "B",          "--mode", "numeric",
                                         "--op",  data("rot60.json"), "--point", "1,0,50,50",
                                         "--box=-0.1:0.1"};
  Run r = run(base);
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["flags"]["boundary_hit"] == true);
  auto strict = base;
  strict.push_back("--strict");
  r = run(strict);
  CHECK(r.code == cli::kFailure);
}

TEST_CASE("cli: compare sweeps") {
  SUBCASE("identity in 1-D: all columns agree") {
    const Run r = run({"compare", "--op", data("id1.json"), "--box=-2:2", "--m", "5"});
    REQUIRE(r.code == cli::kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 26);
    CHECK(ls[0] == "x1,xstar1,A,B,C,unified,maxgap");
    for (std::size_t i = 1; i < ls.size(); ++i) {
      const std::string gap = ls[i].substr(ls[i].rfind(',') + 1);
      REQUIRE_FALSE(gap.empty());
      CHECK(std::stod(gap) <= 1e-6);
    }
  }
  SUBCASE("numeric mode also agrees") {
    const Run r = run({"compare", "--op", data("rot60.json"), "--box=-1:1", "--m", "3", "--mode", "numeric"});
    REQUIRE(r.code == cli::kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 82);
    for (std::size_t i = 1; i < ls.size(); ++i) CHECK(std::stod(ls[i].substr(ls[i].rfind(',') + 1)) <= 1e-6);
  }
  SUBCASE("antisymmetric operator: finite only on graph nodes") {
    const Run r = run({"compare", "--op", data("quarter_turn.txt"), "--box=-1:1", "--m", "3"});
    REQUIRE(r.code == cli::kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 82);
    int finite = 0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
      double v[4];
      char comma;
      std::istringstream is(ls[i]);
      is >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3] >> comma;
      const bool on_graph = v[2] == -v[1] && v[3] == v[0];
      const std::string rest = ls[i].substr(static_cast<std::size_t>(is.tellg()));
      CHECK((rest.rfind(",,,,", 0) == 0) == !on_graph);
      finite += on_graph ? 1 : 0;
    }
    CHECK(finite == 9);
  }
  SUBCASE("-ln: A is +inf outside C / sqrt 2 while f + f* is finite") {
    const Run r = run({"compare", "--neglog", "--box=-1:2", "--m", "4"});
    REQUIRE(r.code == cli::kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 17);
    bool saw_gap = false;
    for (std::size_t i = 1; i < ls.size(); ++i) {
      if (ls[i].rfind("1,-1,", 0) == 0) CHECK(ls[i] == "1,-1,-1,-1,-1,,0");
      // (2, -1/... ) is not on this grid; (1, 0) has x* = 0, outside every domain.
      if (ls[i].rfind("2,-1,", 0) == 0) {
        CHECK(ls[i].find(",,") != std::string::npos);
        saw_gap = true;
      }
    }
    CHECK(saw_gap);
  }
}

TEST_CASE("cli: verify") {
  Run r = run({"verify", "neglog-domains"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("neglog-domains: pass") != std::string::npos);
  r = run({"verify", "coincidence", "--n", "3", "--trials", "4"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "autoconj", "--op", data("rot60.json")});
  CHECK(r.code == cli::kOk);
  CHECK(run({"verify", "nonsense"}).code == cli::kParseError);
}

TEST_CASE("cli: gallery tables") {
  Run r = run({"gallery", "idfam", "--g", "power:3", "--point", "2,0"});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(1 + 2 * std::sqrt(2.0) / 3).epsilon(1e-14));

  r = run({"gallery", "idfam", "--g", "halfline", "--format", "csv", "--m", "3", "--box=-1:1"});
  CHECK(r.code == cli::kOk);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "x,y,value");
  CHECK(ls[2].rfind("0,-1,0.2499999", 0) == 0);
  CHECK(ls[4] == "-1,0,");

  r = run({"gallery", "l2demo", "--n", "100", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[1].rfind("1,1,1.5,1", 0) == 0);

  r = run({"gallery", "neglog", "--sweep", "--format", "csv", "--m", "4"});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out).size() == 17);

  r = run({"gallery", "neglog", "--which", "Brep", "--point", "1,-1", "--point", "1,-0.1"});
  CHECK(r.code == cli::kOk);
  ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(json::parse(ls[0])["value"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(json::parse(ls[1])["value"] == "inf");

  CHECK(run({"gallery", "idfam", "--g", "power:0.5", "--point", "1,1"}).code == cli::kParseError);
}

TEST_CASE("cli: graph export and --out") {
  const std::string path = "autoconj_test_graph.csv";
  const Run r = run({"graph", "--op", data("id1.json"), "--kind", "C", "--box=-1:1", "--m", "5", "--out", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  CHECK(r.err.find("monotone audit: pass") != std::string::npos);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto ls = lines(ss.str());
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "x1,xstar1,residual");
  CHECK(ls[1] == "-1,-1,0");
  std::remove(path.c_str());

  const Run n = run({"graph", "--neglog", "--box=-3:3", "--m", "13"});
  CHECK(n.code == cli::kOk);
  CHECK(n.out.find("1,-1,0") != std::string::npos);
}
