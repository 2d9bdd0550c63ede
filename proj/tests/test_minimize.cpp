#include <cmath>

#include "autoconj/minimize.hpp"
#include "doctest.h"

using namespace autoconj;

TEST_CASE("one-dimensional smooth minimum") {
  const auto r = minimize_convex([](const Vector& v) { return ExtReal((v(0) - 1.3) * (v(0) - 1.3) + 2.0); }, 1,
                                 -10, 10);
  CHECK(r.argmin(0) == doctest::Approx(1.3).epsilon(1e-7));
  CHECK(r.objective.value() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.attained());
  CHECK_FALSE(r.empty);
  CHECK(r.certificate <= 1e-8);
}

TEST_CASE("minimum on the edge of the domain") {
  // x on [1, inf), +inf to the left.
  const auto f = [](const Vector& v) { return v(0) >= 1.0 ? ExtReal(v(0)) : kInf; };
  const auto r = minimize_convex(f, 1, -10, 10);
  CHECK(r.argmin(0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.objective.value() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.attained());
}

TEST_CASE("narrow domain between probes is found when a probe lands in it") {
  const auto f = [](const Vector& v) { return std::abs(v(0) - 0.5) <= 0.3 ? ExtReal(-v(0)) : kInf; };
  const auto r = minimize_convex(f, 1, -10, 10);
  CHECK(r.objective.value() == doctest::Approx(-0.8).epsilon(1e-8));
}

TEST_CASE("empty domain gives +inf") {
  const auto r = minimize_convex([](const Vector&) { return kInf; }, 2, -1, 1);
  CHECK(r.empty);
  CHECK(r.objective.is_infinite());
}

TEST_CASE("box is doubled once on a boundary hit") {
  SUBCASE("minimizer outside the first box") {
    const auto r = minimize_convex([](const Vector& v) { return ExtReal((v(0) - 15) * (v(0) - 15)); }, 1, -10, 10);
    CHECK(r.box_lo == -20);
    CHECK(r.box_hi == 20);
    CHECK(r.argmin(0) == doctest::Approx(15).epsilon(1e-8));
    CHECK(r.attained());
  }
  SUBCASE("unbounded below keeps the flag") {
    const auto r = minimize_convex([](const Vector& v) { return ExtReal(v(0) + v(1)); }, 2, -10, 10);
    CHECK(r.boundary_hit);
    CHECK_FALSE(r.attained());
    CHECK(r.box_lo == -20);
  }
  SUBCASE("no expansion when disabled") {
    MinimizeOptions o;
    o.expand_once = false;
    const auto r = minimize_convex([](const Vector& v) { return ExtReal(-v(0)); }, 1, -10, 10, o);
    CHECK(r.boundary_hit);
    CHECK(r.box_hi == 10);
  }
}

TEST_CASE("coupled quadratic in two and three dimensions") {
  const auto f2 = [](const Vector& v) {
    const double a = v(0) - 1;
    const double b = v(1) + 2;
    return ExtReal(a * a + 10 * b * b + a * b);
  };
  const auto r2 = minimize_convex(f2, 2, -10, 10);
  CHECK(r2.argmin(0) == doctest::Approx(1).epsilon(1e-6));
  CHECK(r2.argmin(1) == doctest::Approx(-2).epsilon(1e-6));
  CHECK(std::abs(r2.objective.value()) <= 1e-12);

  Matrix q(3, 3);
  q << 4, 1, 0, 1, 3, -1, 0, -1, 2;
  Vector c(3);
  c << 0.5, -1.5, 2.0;
  const auto f3 = [&](const Vector& v) { return ExtReal(0.5 * v.dot(q * v) - c.dot(v)); };
  const auto r3 = minimize_convex(f3, 3, -10, 10);
  const Vector exact = q.ldlt().solve(c);
  CHECK((r3.argmin - exact).norm() <= 1e-6);
  CHECK(r3.objective.value() == doctest::Approx(-0.5 * c.dot(exact)).epsilon(1e-10));
}

TEST_CASE("nested 2-D handles a kinked objective") {
  MinimizeOptions o;
  o.nested_2d = true;
  const auto f = [](const Vector& v) { return ExtReal(std::abs(v(0) - v(1)) + std::abs(v(0) + v(1) - 1)); };
  const auto r = minimize_convex(f, 2, -5, 5, o);
  CHECK(r.objective.value() <= 1e-8);
}

TEST_CASE("zero-dimensional problems evaluate directly") {
  const auto r = minimize_convex([](const Vector& v) { return ExtReal(static_cast<double>(v.size()) + 4); }, 0, -1, 1);
  CHECK(r.objective == ExtReal(4.0));
  CHECK(r.iterations == 1);
}

TEST_CASE("invalid box") {
  CHECK_THROWS_AS(minimize_convex([](const Vector&) { return ExtReal(0.0); }, 1, 1, 1), std::invalid_argument);
}
