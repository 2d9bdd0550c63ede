#include <cmath>
#include <numbers>
#include <random>

#include "autoconj/linear_operator.hpp"
#include "autoconj/matrix_io.hpp"
#include "autoconj/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace autoconj;
using testing_support::random_psd;
using testing_support::uniform_vector;

namespace {
Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}
Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}
}  // namespace

TEST_CASE("decompose splits into symmetric and antisymmetric parts") {
  SUBCASE("antisymmetric input") {
    const LinearMonotoneOperator a(mat2(0, -1, 1, 0));
    const auto [sym, anti] = decompose(a);
    CHECK(sym.matrix().isZero(0.0));
    CHECK(anti == a.matrix());
  }
  SUBCASE("symmetric input") {
    const LinearMonotoneOperator a(mat2(2, 0, 0, 3));
    const auto [sym, anti] = decompose(a);
    CHECK(sym.matrix() == a.matrix());
    CHECK(anti.isZero(0.0));
  }
  SUBCASE("rotation by pi/3") {
    const double th = std::numbers::pi / 3;
    const LinearMonotoneOperator a(rotation(th));
    const auto [sym, anti] = decompose(a);
    CHECK((sym.matrix() - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((anti - std::sqrt(3.0) / 2 * mat2(0, -1, 1, 0)).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("non-square input is rejected") {
    CHECK_THROWS_AS(LinearMonotoneOperator(Matrix::Ones(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("decomposition parts are exactly (anti)symmetric and reconstruct A") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testing_support::random_monotone(rng, 3);
    const LinearMonotoneOperator a(m);
    const Matrix& p = a.symmetric_part().matrix();
    const Matrix& q = a.antisymmetric_part();
    CHECK(p == p.transpose());
    CHECK(q == -q.transpose());
    CHECK((p + q - m).cwiseAbs().maxCoeff() <= 4e-16 * m.cwiseAbs().maxCoeff());
  }
  // Dyadic entries: reconstruction is bit-exact.
  const Matrix d = mat2(1.5, -0.25, 0.75, 2.0);
  const LinearMonotoneOperator a(d);
  CHECK(a.symmetric_part().matrix() + a.antisymmetric_part() == d);
}

TEST_CASE("certify_monotone") {
  CHECK(certify_monotone(Matrix::Identity(2, 2)));
  CHECK(certify_monotone(mat2(0, -1, 1, 0)));
  CHECK_FALSE(certify_monotone(mat2(-1, 0, 0, 1)));
  CHECK_FALSE(certify_monotone(Matrix::Ones(2, 3)));
  // Rotation just short of pi/2: symmetric part ~ 6e-17 * Id.
  CHECK(certify_monotone(rotation(std::numbers::pi / 2)));
  CHECK_THROWS_AS(LinearMonotoneOperator(mat2(-1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("quad_eval") {
  CHECK(quad_eval(QuadraticForm(Matrix::Identity(2, 2)), vec2(3, 4)) == doctest::Approx(12.5));
  CHECK(quad_eval(QuadraticForm(mat2(2, 0, 0, 0)), vec2(1, 5)) == doctest::Approx(1.0));
  const LinearMonotoneOperator rot(rotation(std::numbers::pi / 3));
  CHECK(quad_eval(rot.symmetric_part(), vec2(1, 0)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(quad_eval(QuadraticForm(Matrix::Identity(2, 2)), Vector::Ones(3)), DimensionError);
}

TEST_CASE("quad_conjugate_eval") {
  const QuadraticForm q(mat2(2, 0, 0, 0));
  CHECK(quad_conjugate_eval(q, vec2(2, 0)).value() == doctest::Approx(1.0));
  CHECK(quad_conjugate_eval(q, vec2(0, 1)).is_infinite());
  CHECK(q.rank() == 1);

  SUBCASE("zero form: conjugate is the indicator of the origin") {
    const QuadraticForm z(Matrix::Zero(2, 2));
    CHECK(z.conjugate(vec2(0, 0)) == ExtReal(0.0));
    CHECK(z.conjugate(vec2(1e-12, 0)) == ExtReal(0.0));
    CHECK(z.conjugate(vec2(1e-3, 0)).is_infinite());
  }
  SUBCASE("1-D identity: q*(x* + x) = q(x) + x x* + q*(x*)") {
    const QuadraticForm one(Matrix::Identity(1, 1));
    for (double x : {-1.5, 0.0, 0.7}) {
      for (double xs : {-2.0, 0.3, 1.0}) {
        const double lhs = one.conjugate(Vector::Constant(1, xs + x)).value();
        CHECK(lhs == doctest::Approx(0.5 * x * x + x * xs + 0.5 * xs * xs));
      }
    }
  }
  CHECK_THROWS_AS(QuadraticForm(mat2(1, 0, 0, -1)), std::invalid_argument);
}

TEST_CASE("pseudoinverse invariants") {
  std::mt19937_64 rng(11);
  for (Eigen::Index rank = 0; rank <= 3; ++rank) {
    const QuadraticForm q(random_psd(rng, 3, rank));
    const Matrix& s = q.matrix();
    CHECK(q.rank() == rank);
    CHECK((s * q.pinv() * s - s).norm() <= 1e-10 * (1.0 + s.norm()));
    for (int i = 0; i < 10; ++i) CHECK(q.eval(uniform_vector(rng, 3, -3, 3)) >= 0.0);
  }
}

TEST_CASE("conjugate identity q*(x* + Ax) = q(x) + <x,x*> + q*(x*) and q* o A = q") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const Eigen::Index rank = trial % 4 == 0 ? n - 1 : n;
    const Matrix s = random_psd(rng, n, rank);
    const QuadraticForm q(s);
    const Vector x = uniform_vector(rng, n, -2, 2);
    // Half the x* in ran S, half arbitrary.
    const Vector xs = trial % 2 == 0 ? Vector(s * uniform_vector(rng, n, -2, 2))
                                     : uniform_vector(rng, n, -2, 2);
    const ExtReal lhs = q.conjugate(xs + s * x);
    const ExtReal rhs = ExtReal(q.eval(x) + x.dot(xs)) + q.conjugate(xs);
    const double scale = 1.0 + s.norm() * (1.0 + x.squaredNorm() + xs.squaredNorm());
    CHECK(lhs.is_finite() == rhs.is_finite());
    if (lhs.is_finite()) CHECK(std::abs(lhs.value() - rhs.value()) <= 1e-9 * scale);

    const ExtReal at_ax = q.conjugate(s * x);
    REQUIRE(at_ax.is_finite());
    CHECK(std::abs(at_ax.value() - q.eval(x)) <= 1e-9 * scale);
  }
}

TEST_CASE("quad_conjugate_eval matches a brute-force Legendre transform") {
  // 1-D, S = 2: q*(s) = s^2 / 4, maximizer s/2 inside [-4, 4] for |s| <= 4.
  const QuadraticForm q(Matrix::Constant(1, 1, 2.0));
  const GridSpec grid = GridSpec::cube(1, -4, 4, 2001);
  const GridConjugator conj([&](const Vector& v) { return ExtReal(q.eval(v)); }, grid);
  for (double s : {-3.0, -1.2, 0.0, 0.5, 2.9}) {
    const double exact = q.conjugate(Vector::Constant(1, s)).value();
    const double brute = conj(Vector::Constant(1, s));
    CHECK(brute <= exact + 1e-12);
    CHECK(exact - brute <= conj.error_bound());
    CHECK(exact - brute <= 1e-5);
  }
}

TEST_CASE("matrix parsing") {
  SUBCASE("json") {
    const Matrix a = parse_matrix(R"({"n": 2, "rows": [[1, -1], [1, 1]]})");
    CHECK(a == mat2(1, -1, 1, 1));
  }
  SUBCASE("plain text with comments") {
    const Matrix a = parse_matrix("# rotation\n 0 -1\n1   0\n\n");
    CHECK(a == mat2(0, -1, 1, 0));
  }
  SUBCASE("ragged text rows report line and column") {
    try {
      parse_matrix("1 2\n3\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("bad token") {
    try {
      parse_matrix("1 2\n3 x4\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("json errors") {
    CHECK_THROWS_AS(parse_matrix(R"({"n": 3, "rows": [[1, 0], [0, 1]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows": [[1, 0], [0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix("{\"rows\": [[1, 0],\n [0, 1]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("   "), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2 3\n4 5 6\n"), ParseError);
  }
  SUBCASE("json round trip") {
    const Matrix a = rotation(0.3);
    CHECK(parse_matrix(matrix_to_json(a)) == a);
  }
}
