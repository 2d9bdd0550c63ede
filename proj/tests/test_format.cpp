#include <cmath>
#include <limits>
#include <random>

#include "autoconj/format.hpp"
#include "doctest.h"

using namespace autoconj;

TEST_CASE("format_double is the shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.1) == "-0.1");
  CHECK(format_double(1e-300) == "1e-300");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 1000; ++k) {
    const double v = u(rng) * std::pow(10.0, k % 40 - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv and json encodings of +inf") {
  CHECK(csv_cell(kInf).empty());
  CHECK(csv_cell(ExtReal(2.5)) == "2.5");
  CHECK(to_json(kInf) == "inf");
  CHECK(to_json(ExtReal(-3.0)) == -3.0);
  CHECK(ext_from_json(to_json(kInf)).is_infinite());
  CHECK(ext_from_json(to_json(ExtReal(0.1))) == ExtReal(0.1));
  CHECK_THROWS_AS(ext_from_json(nlohmann::json("nan")), std::invalid_argument);
  const double tricky = 0.1 + 0.2;
  CHECK(ext_from_json(nlohmann::json::parse(to_json(ExtReal(tricky)).dump())).value() == tricky);
}
