#include <doctest.h>

#include <cmath>
#include <limits>

#include "curvature.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace eqcurv;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("identity scalar product") {
  const ScalarProduct g = ScalarProduct::build(Matrix::Identity(3, 3));
  CHECK(g.signature() == std::pair{3, 0});
  CHECK(g.inverse().isApprox(Matrix::Identity(3, 3)));
}

TEST_CASE("Lorentzian diagonal is self-inverse") {
  Matrix d = Matrix::Identity(4, 4);
  d(3, 3) = -1.0;
  const ScalarProduct g = ScalarProduct::build(d);
  CHECK(g.signature() == std::pair{3, 1});
  CHECK((g.inverse() - d).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("diag(2,1,1) inverse") {
  Matrix d = Matrix::Identity(3, 3);
  d(0, 0) = 2.0;
  const ScalarProduct g = ScalarProduct::build(d);
  // hand inversion of a diagonal matrix
  CHECK(g.inverse()(0, 0) == doctest::Approx(0.5));
  CHECK(g.inverse()(1, 1) == doctest::Approx(1.0));
  CHECK(g.inverse()(2, 2) == doctest::Approx(1.0));
  CHECK((g.matrix() * g.inverse() - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("standard form") {
  const ScalarProduct g = ScalarProduct::standard(2, 1);
  CHECK(g.matrix()(0, 0) == 1.0);
  CHECK(g.matrix()(1, 1) == 1.0);
  CHECK(g.matrix()(2, 2) == -1.0);
  CHECK(g.signature() == std::pair{2, 1});
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { (void)ScalarProduct::build(Matrix::Identity(2, 2)); }) == ErrorCode::DimensionTooSmall);
  Matrix asym = Matrix::Identity(3, 3);
  asym(0, 1) = 1e-9;
  CHECK(code_of([&] { (void)ScalarProduct::build(asym); }) == ErrorCode::NotSymmetric);
  Matrix deg = Matrix::Identity(3, 3);
  deg(2, 2) = 1e-12;
  CHECK(code_of([&] { (void)ScalarProduct::build(deg); }) == ErrorCode::DegenerateMetric);
  Matrix bad = Matrix::Identity(3, 3);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((void)ScalarProduct::build(bad), Error);
  CHECK(code_of([] { (void)ScalarProduct::build(Matrix::Identity(3, 4)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("scaled keeps signature and inverts the factor") {
  const ScalarProduct g = ScalarProduct::standard(2, 1).scaled(4.0);
  CHECK(g.signature() == std::pair{2, 1});
  CHECK(g.inverse()(2, 2) == doctest::Approx(-0.25));
  CHECK_THROWS_AS((void)g.scaled(-1.0), Error);
}

TEST_CASE("sym/antisym split of an elementary form") {
  Matrix b = Matrix::Zero(3, 3);
  b(0, 1) = 1.0;
  const auto [s, l] = sym_antisym_split(b);
  CHECK(s(0, 1) == 0.5);
  CHECK(s(1, 0) == 0.5);
  CHECK(l(0, 1) == 0.5);
  CHECK(l(1, 0) == -0.5);
  CHECK(s.cwiseAbs().sum() == doctest::Approx(1.0));
  CHECK(l.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("split fixed points and reconstruction") {
  gen::for_all(20, 1, [](gen::Source& src, int) {
    const int n = src.integer(3, 5);
    const Matrix sym = src.symmetric(n);
    const Matrix anti = src.antisymmetric(n);
    CHECK(max_abs(sym_part(sym) - sym) == 0.0);
    CHECK(max_abs(antisym_part(sym)) == 0.0);
    CHECK(max_abs(antisym_part(anti) - anti) == 0.0);
    const Matrix b = src.form(n);
    const auto [s, l] = sym_antisym_split(b);
    CHECK(max_abs(s + l - b) < 1e-15);
    const auto [s2, l2] = sym_antisym_split(s);
    CHECK(max_abs(s2 - s) == 0.0);
    CHECK(max_abs(l2) == 0.0);
  });
}

TEST_CASE("inverse invariant on random metrics") {
  gen::for_all(30, 2, [](gen::Source& src, int) {
    const auto [p, q] = src.signature();
    const ScalarProduct g = src.metric(p, q);
    CHECK(g.signature() == std::pair{p, q});
    const Matrix prod = g.matrix() * g.inverse();
    CHECK((prod - Matrix::Identity(p + q, p + q)).cwiseAbs().maxCoeff() < 1e-10);
  });
}

TEST_CASE("pairing of g^g with itself is 2n(n-1)") {
  for (int n : {3, 4}) {
    const Matrix g = Matrix::Identity(n, n);
    const Curvature4Tensor gg = oracle::wedge(g, g, 0.0);
    const double brute = oracle::pairing(gg, gg, g);
    CHECK(brute == doctest::Approx(2.0 * n * (n - 1)));
    CHECK(tensor_pairing(gg, gg, ScalarProduct::standard(n, 0)) == doctest::Approx(brute));
  }
}

TEST_CASE("pairing against the brute-force contraction") {
  gen::for_all(8, 4, [](gen::Source& src, int) {
    const int n = src.integer(3, 4);
    const int q = src.integer(0, 1);
    const ScalarProduct g = src.metric(n - q, q);
    const Curvature4Tensor a = src.tensor(n);
    const Curvature4Tensor b = src.tensor(n);
    const double brute = oracle::pairing(a, b, g.inverse());
    CHECK(tensor_pairing(a, b, g) == doctest::Approx(brute).epsilon(1e-12));
    CHECK(tensor_pairing(a, b, g) == doctest::Approx(tensor_pairing(b, a, g)).epsilon(1e-13));
    CHECK(tensor_pairing(a, Curvature4Tensor(n), g) == 0.0);
  });
}

TEST_CASE("pairing is bilinear and positive for Euclidean g") {
  gen::for_all(20, 5, [](gen::Source& src, int) {
    const int n = src.integer(3, 5);
    const ScalarProduct g = src.metric(n, 0);
    const Curvature4Tensor a = src.tensor(n);
    const Curvature4Tensor b = src.tensor(n);
    const Curvature4Tensor c = src.tensor(n);
    const double s = src.real();
    const double lhs = tensor_pairing(a + s * c, b, g);
    const double rhs = tensor_pairing(a, b, g) + s * tensor_pairing(c, b, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    CHECK(tensor_pairing(a, a, g) > 0.0);
  });
}

TEST_CASE("pairing dimension mismatch") {
  CHECK(code_of([] {
          (void)tensor_pairing(Curvature4Tensor(3), Curvature4Tensor(4), ScalarProduct::standard(3, 0));
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("trace_g and vector round trip") {
  gen::Source src(6);
  const ScalarProduct g = src.metric(2, 1);
  const Matrix b = src.form(3);
  double brute = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) brute += g.inverse()(i, j) * b(i, j);
  CHECK(trace_g(b, g) == doctest::Approx(brute));
  const Curvature4Tensor t = src.tensor(3);
  CHECK(from_vector(3, to_vector(t)) == t);
}

} // TEST_SUITE
