#include <doctest.h>

#include <cmath>

#include "chart.hpp"
#include "curvature.hpp"
#include "error.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace eqcurv;

namespace {

PolyChart flat_chart(int p, int q) {
  const int n = p + q;
  PolyChart chart(n);
  for (int i = 0; i < n; ++i) chart.set_metric(i, i, Polynomial::constant(n, i < p ? 1.0 : -1.0));
  return chart;
}

void set_constant_cubic(PolyChart& chart, gen::Source& src) {
  const int n = chart.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) chart.set_cubic(i, j, k, Polynomial::constant(n, src.real()));
}

} // namespace

TEST_SUITE("chart") {

TEST_CASE("flat chart without cubic form") {
  const PolyChart chart = flat_chart(3, 0);
  const std::vector<double> x{0.3, -0.2, 0.1};
  const Christoffel ch = christoffel(chart, x);
  CHECK(ch.gamma.max_norm() == 0.0);
  for (const auto& d : ch.dgamma) CHECK(d.max_norm() == 0.0);
  const TripleReport rep = conjugate_triple_report(chart, x);
  CHECK(rep.R.max_norm() == 0.0);
  CHECK(rep.R_star.max_norm() == 0.0);
  CHECK(rep.R_g.max_norm() == 0.0);
  CHECK(rep.pick_invariant == 0.0);
  CHECK(rep.tau == 0.0);
  CHECK(rep.kappa == 0.0);
  for (const auto& [name, r] : rep.identity_residuals) {
    CAPTURE(name);
    CHECK(r == 0.0);
  }
}

TEST_CASE("flat chart with constant cubic form") {
  for (const auto& [p, q] : {std::pair{3, 0}, std::pair{2, 1}}) {
    gen::Source src(50 + static_cast<std::uint64_t>(q));
    PolyChart chart = flat_chart(p, q);
    set_constant_cubic(chart, src);
    const std::vector<double> x{0.1, 0.2, -0.3};
    const Curvature4Tensor expect = oracle::gamma_term(chart, x);
    CHECK((curvature_at(chart, x, Connection::levi_civita)).max_norm() == 0.0);
    CHECK((curvature_at(chart, x, Connection::nabla) - expect).max_norm() <= 1e-12);
    CHECK((curvature_at(chart, x, Connection::nabla_star) - expect).max_norm() <= 1e-12);
    const TripleReport rep = conjugate_triple_report(chart, x);
    CHECK(rep.kappa == 0.0);
    // the defect vanishes, so R = R*
    CHECK((rep.R - rep.R_star).max_norm() <= 1e-12);
    const double n = 3.0;
    CHECK(rep.tau == doctest::Approx(n * n * rep.norm_t_sq - rep.norm_c_sq).epsilon(1e-12));
    CHECK(rep.identity_residuals.at("remark_7_7") <= 1e-9);
    for (const auto& [name, r] : rep.identity_residuals) {
      CAPTURE(name);
      CHECK(r <= 1e-12);
    }
  }
}

TEST_CASE("conformally flat metric: Christoffel symbols at the origin") {
  const int n = 3;
  PolyChart chart(n);
  const Polynomial x0 = Polynomial::variable(n, 0);
  const Polynomial f = Polynomial::constant(n, 1.0) + x0 * x0;
  for (int i = 0; i < n; ++i) chart.set_metric(i, i, f);
  const std::vector<double> origin{0.0, 0.0, 0.0};
  const Christoffel ch = christoffel(chart, origin);
  CHECK(ch.gamma.max_norm() == 0.0);
  CHECK(ch.dgamma[0].max_norm() > 0.5);
  // hand differentiation: d_0 Gamma^0_{00} = (1/2) f''(0) / f(0) = 1
  CHECK(ch.dgamma[0](0, 0, 0) == doctest::Approx(1.0));
  CHECK(ch.dgamma[0](1, 0, 1) == doctest::Approx(1.0));
  CHECK(ch.dgamma[0](0, 1, 1) == doctest::Approx(-1.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) CHECK(ch.gamma(i, j, k) == ch.gamma(i, k, j));
}

TEST_CASE("Levi-Civita curvature against the finite-difference oracle") {
  const int n = 3;
  PolyChart chart(n);
  const double eps = 0.3;
  const Polynomial x0 = Polynomial::variable(n, 0);
  const Polynomial f = Polynomial::constant(n, 1.0) + eps * (x0 * x0);
  for (int i = 0; i < n; ++i) chart.set_metric(i, i, f);
  const std::vector<double> x{0.4, -0.7, 0.2};
  const oracle::MetricField metric = [&](const std::vector<double>& y) { return oracle::metric_at(chart, y); };
  const Curvature4Tensor fd = oracle::curvature_from(oracle::levi_civita_fd(metric, x), metric(x));
  const Curvature4Tensor exact = curvature_at(chart, x, Connection::levi_civita);
  CHECK(exact.max_norm() > 1e-2);
  CHECK((exact - fd).max_norm() <= 1e-7);
}

TEST_CASE("random charts: all three connections against finite differences") {
  for (std::uint64_t idx = 0; idx < 4; ++idx) {
    const PolyChart chart = random_poly_chart(2, 1, 7, idx);
    const std::vector<double> x{0.2, -0.1, 0.15};
    const Matrix g = oracle::metric_at(chart, x);
    for (const auto& [which, sign] :
         {std::pair{Connection::levi_civita, 0.0}, std::pair{Connection::nabla, 1.0},
          std::pair{Connection::nabla_star, -1.0}}) {
      const Curvature4Tensor fd = oracle::curvature_from(oracle::shifted_fd(chart, x, sign), g);
      CHECK((curvature_at(chart, x, which) - fd).max_norm() <= 1e-7);
    }
  }
}

TEST_CASE("random charts: identity residuals") {
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    const PolyChart chart = random_poly_chart(3, 0, 11, idx);
    gen::Source src(60 + idx);
    const std::vector<double> x{src.real(-0.5, 0.5), src.real(-0.5, 0.5), src.real(-0.5, 0.5)};
    const TripleReport rep = conjugate_triple_report(chart, x);
    for (const auto& [name, r] : rep.identity_residuals) {
      CAPTURE(name);
      CHECK(r <= 1e-8);
    }
    CHECK((conjugate(rep.R) - rep.R_star).max_norm() <= 1e-8 * std::max(1.0, rep.R.max_norm()));
    const ScalarProduct g = ScalarProduct::build(oracle::metric_at(chart, x));
    CHECK(membership(rep.R, g, Space::r).residual <= 1e-10);
    CHECK(membership(rep.R_star, g, Space::r).residual <= 1e-10);
    CHECK(membership(rep.R_g, g, Space::a).residual <= 1e-10);
    CHECK(rep.pick_invariant == doctest::Approx(rep.norm_c_sq / 6.0));
  }
}

TEST_CASE("Tchebychev form and trace-free cubic form") {
  const PolyChart chart = random_poly_chart(2, 1, 3, 0);
  const std::vector<double> x{0.1, 0.1, -0.2};
  const TripleReport rep = conjugate_triple_report(chart, x);
  const int n = 3;
  for (int h = 0; h < n; ++h) {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += rep.c_op(i, h, i);
    CHECK(rep.tchebychev_form(h) == doctest::Approx(t / n));
  }
  CHECK(rep.identity_residuals.at("c_tilde_trace") <= 1e-12);
}

TEST_CASE("degenerate metric at the point") {
  const int n = 3;
  PolyChart chart(n);
  chart.set_metric(0, 0, Polynomial::variable(n, 0));
  chart.set_metric(1, 1, Polynomial::constant(n, 1.0));
  chart.set_metric(2, 2, Polynomial::constant(n, 1.0));
  const std::vector<double> origin{0.0, 0.0, 0.0};
  try {
    (void)conjugate_triple_report(chart, origin);
    FAIL("expected DegenerateAtPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateAtPoint);
  }
  const std::vector<double> ok{0.5, 0.0, 0.0};
  CHECK_NOTHROW((void)conjugate_triple_report(chart, ok));
  CHECK_THROWS_AS((void)christoffel(chart, std::vector<double>{1.0, 2.0}), Error);
}

TEST_CASE("cubic and metric entries are symmetric") {
  PolyChart chart(3);
  chart.set_metric(0, 2, Polynomial::variable(3, 1));
  CHECK(chart.metric(2, 0) == chart.metric(0, 2));
  chart.set_cubic(2, 0, 1, Polynomial::constant(3, 2.0));
  for (const auto& idx : {std::array{0, 1, 2}, std::array{0, 2, 1}, std::array{1, 0, 2}, std::array{1, 2, 0},
                          std::array{2, 0, 1}, std::array{2, 1, 0}})
    CHECK(chart.cubic(idx[0], idx[1], idx[2]).evaluate(std::vector<double>{0, 0, 0}) == 2.0);
  CHECK_THROWS_AS(chart.set_metric(0, 0, Polynomial::constant(2, 1.0)), Error);
}

} // TEST_SUITE
