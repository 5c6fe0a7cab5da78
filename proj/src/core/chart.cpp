#include "chart.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "error.hpp"
#include "sampling.hpp"

namespace eqcurv {

PolyChart::PolyChart(int dim)
    : n_(dim), metric_(static_cast<std::size_t>(dim) * dim, Polynomial(dim)),
      cubic_(static_cast<std::size_t>(dim) * dim * dim, Polynomial(dim)) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "chart dimension must be positive");
}

void PolyChart::set_metric(int i, int j, const Polynomial& p) {
  if (p.num_vars() != n_) fail(ErrorCode::DimensionMismatch, "metric entry has wrong variable count");
  metric_[idx2(i, j)] = p;
  metric_[idx2(j, i)] = p;
}

void PolyChart::set_cubic(int i, int j, int k, const Polynomial& p) {
  if (p.num_vars() != n_) fail(ErrorCode::DimensionMismatch, "cubic entry has wrong variable count");
  const std::array<std::array<int, 3>, 6> perms{{{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}}};
  for (const auto& a : perms) cubic_[idx3(a[0], a[1], a[2])] = p;
}

PointGeometry evaluate_geometry(const PolyChart& chart, std::span<const double> point) {
  const int n = chart.dim();
  if (static_cast<int>(point.size()) != n)
    fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) + " coordinates, chart has " +
                                           std::to_string(n));
  PointGeometry pg;
  pg.point.assign(point.begin(), point.end());
  pg.g = Matrix(n, n);
  std::vector<Matrix> dg(static_cast<std::size_t>(n), Matrix(n, n));
  std::vector<std::vector<Matrix>> ddg(static_cast<std::size_t>(n), std::vector<Matrix>(static_cast<std::size_t>(n), Matrix(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Polynomial& gij = chart.metric(i, j);
      pg.g(i, j) = gij.evaluate(point);
      for (int m = 0; m < n; ++m) {
        const Polynomial d = gij.derivative(m);
        dg[m](i, j) = d.evaluate(point);
        for (int q = 0; q < n; ++q) ddg[m][q](i, j) = d.derivative(q).evaluate(point);
      }
    }
  try {
    pg.ginv = ScalarProduct::build(pg.g).inverse();
  } catch (const Error& e) {
    fail(ErrorCode::DegenerateAtPoint, std::string("metric unusable at point: ") + e.what());
  }
  const Matrix& G = pg.ginv;

  // first-kind symbols and their derivatives
  Array3 g1(n);
  std::vector<Array3> dg1(static_cast<std::size_t>(n), Array3(n));
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        g1(l, j, k) = 0.5 * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
        for (int m = 0; m < n; ++m)
          dg1[m](l, j, k) = 0.5 * (ddg[m][j](l, k) + ddg[m][k](l, j) - ddg[m][l](j, k));
      }
  std::vector<Matrix> dG(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) dG[m] = -G * dg[m] * G;

  pg.gamma = Array3(n);
  pg.dgamma.assign(static_cast<std::size_t>(n), Array3(n));
  pg.c_flat = Array3(n);
  pg.c_op = Array3(n);
  pg.dc_op.assign(static_cast<std::size_t>(n), Array3(n));
  std::vector<Array3> dc_flat(static_cast<std::size_t>(n), Array3(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Polynomial& c = chart.cubic(j, k, l);
        pg.c_flat(j, k, l) = c.evaluate(point);
        for (int m = 0; m < n; ++m) dc_flat[m](j, k, l) = c.derivative(m).evaluate(point);
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double gam = 0.0, c = 0.0;
        for (int l = 0; l < n; ++l) {
          gam += G(i, l) * g1(l, j, k);
          c += G(i, l) * pg.c_flat(j, k, l);
        }
        pg.gamma(i, j, k) = gam;
        pg.c_op(i, j, k) = c;
        for (int m = 0; m < n; ++m) {
          double dgam = 0.0, dc = 0.0;
          for (int l = 0; l < n; ++l) {
            dgam += dG[m](i, l) * g1(l, j, k) + G(i, l) * dg1[m](l, j, k);
            dc += dG[m](i, l) * pg.c_flat(j, k, l) + G(i, l) * dc_flat[m](j, k, l);
          }
          pg.dgamma[m](i, j, k) = dgam;
          pg.dc_op[m](i, j, k) = dc;
        }
      }
  return pg;
}

Christoffel christoffel(const PolyChart& chart, std::span<const double> point) {
  PointGeometry pg = evaluate_geometry(chart, point);
  return {std::move(pg.gamma), std::move(pg.dgamma)};
}

Curvature4Tensor curvature_operator(const Array3& gamma, const std::vector<Array3>& dgamma) {
  const int n = gamma.dim();
  return Curvature4Tensor::generate(n, [&](int j, int k, int l, int i) {
    double v = dgamma[k](i, l, j) - dgamma[l](i, k, j);
    for (int h = 0; h < n; ++h) v += gamma(i, k, h) * gamma(h, l, j) - gamma(i, l, h) * gamma(h, k, j);
    return v;
  });
}

Curvature4Tensor lower_operator(const Curvature4Tensor& op, const Matrix& g) {
  const int n = op.dim();
  return Curvature4Tensor::generate(n, [&](int k, int l, int j, int w) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += op(j, k, l, i) * g(i, w);
    return v;
  });
}

namespace {

struct Connections {
  Array3 gamma;
  std::vector<Array3> dgamma;
};

Connections shifted(const PointGeometry& pg, double sign) {
  const int n = static_cast<int>(pg.g.rows());
  Connections c{Array3(n), std::vector<Array3>(static_cast<std::size_t>(n), Array3(n))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c.gamma(i, j, k) = pg.gamma(i, j, k) + sign * pg.c_op(i, j, k);
        for (int m = 0; m < n; ++m) c.dgamma[m](i, j, k) = pg.dgamma[m](i, j, k) + sign * pg.dc_op[m](i, j, k);
      }
  return c;
}

double sign_of(Connection which) {
  switch (which) {
  case Connection::nabla: return 1.0;
  case Connection::nabla_star: return -1.0;
  default: return 0.0;
  }
}

double rel(double diff, double a, double b) { return diff / std::max({1.0, a, b}); }

double rel_tensor(const Curvature4Tensor& a, const Curvature4Tensor& b) {
  return rel((a - b).max_norm(), a.max_norm(), b.max_norm());
}

} // namespace

Curvature4Tensor curvature_at(const PolyChart& chart, std::span<const double> point, Connection which) {
  const PointGeometry pg = evaluate_geometry(chart, point);
  const Connections c = shifted(pg, sign_of(which));
  return lower_operator(curvature_operator(c.gamma, c.dgamma), pg.g);
}

TripleReport conjugate_triple_report(const PolyChart& chart, std::span<const double> point) {
  const PointGeometry pg = evaluate_geometry(chart, point);
  const int n = chart.dim();
  const double dn = n;
  const Matrix& g = pg.g;
  const Matrix& G = pg.ginv;
  const ScalarProduct sp = ScalarProduct::build(g);

  const Connections cn = shifted(pg, 1.0);
  const Connections cs = shifted(pg, -1.0);
  const Connections cg = shifted(pg, 0.0);
  const Curvature4Tensor op = curvature_operator(cn.gamma, cn.dgamma);
  const Curvature4Tensor op_star = curvature_operator(cs.gamma, cs.dgamma);
  const Curvature4Tensor op_g = curvature_operator(cg.gamma, cg.dgamma);

  TripleReport rep;
  rep.point = pg.point;
  rep.R = lower_operator(op, g);
  rep.R_star = lower_operator(op_star, g);
  rep.R_g = lower_operator(op_g, g);
  rep.c_op = pg.c_op;
  const Array3& C = pg.c_op;

  // covariant derivative of C: dc[k](i,j,l) = nabla(g)_k C^i_{jl}
  std::vector<Array3> dc(static_cast<std::size_t>(n), Array3(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          double v = pg.dc_op[k](i, j, l);
          for (int h = 0; h < n; ++h)
            v += pg.gamma(i, k, h) * C(h, j, l) - pg.gamma(h, k, j) * C(i, h, l) - pg.gamma(h, k, l) * C(i, j, h);
          dc[k](i, j, l) = v;
        }

  const Curvature4Tensor gamma_term = Curvature4Tensor::generate(n, [&](int j, int k, int l, int i) {
    double v = 0.0;
    for (int h = 0; h < n; ++h) v += C(h, j, l) * C(i, h, k) - C(h, j, k) * C(i, h, l);
    return v;
  });
  const Curvature4Tensor dc_skew = Curvature4Tensor::generate(
      n, [&](int j, int k, int l, int i) { return dc[k](i, j, l) - dc[l](i, j, k); });

  auto& res = rep.identity_residuals;
  res["lemma_7_6_1"] = rel_tensor(op - op_g, dc_skew + gamma_term);
  res["lemma_7_6_2"] = rel_tensor(op_star - op_g, gamma_term - dc_skew);
  res["lemma_7_6_3"] = rel_tensor(op - op_star, 2.0 * dc_skew);
  {
    // lowered nabla(g)C defect under exchange of the derivative slot
    const Curvature4Tensor defect = Curvature4Tensor::generate(n, [&](int k, int l, int j, int w) {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += (dc[k](i, j, l) - dc[l](i, j, k)) * g(i, w);
      return v;
    });
    const double lhs = (rep.R - rep.R_star).max_norm();
    const double rhs = 2.0 * defect.max_norm();
    res["lemma_7_6_4"] = rel(std::abs(lhs - rhs), lhs, rhs);
  }
  res["lemma_7_6_5"] = rel_tensor(op + op_star - 2.0 * op_g, 2.0 * gamma_term);

  rep.tchebychev_form = Eigen::VectorXd::Zero(n);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i) rep.tchebychev_form(h) += C(i, h, i) / dn;
  rep.tchebychev_vector = G * rep.tchebychev_form;
  const Eigen::VectorXd& Tf = rep.tchebychev_form;
  const Eigen::VectorXd& Tv = rep.tchebychev_vector;

  rep.c_tilde = Array3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        rep.c_tilde(i, j, k) = C(i, j, k) - dn / (dn + 2) * (Tf(j) * (i == k) + Tf(k) * (i == j) + g(j, k) * Tv(i));

  double nc = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        // C^{jk}_i raised on j,k against C^i_{jk}
        double up = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) up += G(j, a) * G(k, b) * pg.c_flat(a, b, i);
        nc += up * C(i, j, k);
      }
  rep.norm_c_sq = nc;
  rep.norm_t_sq = Tf.dot(Tv);
  rep.pick_invariant = nc / (dn * (dn - 1));
  rep.tau = ricci_traces(rep.R, sp).tau;
  rep.kappa = ricci_traces(rep.R_g, sp).tau / (dn * (dn - 1));

  const double deviation = rep.tau - dn * (dn - 1) * rep.kappa;
  const double pick_side = dn * dn * rep.norm_t_sq - rep.norm_c_sq;
  res["remark_7_7"] = rel(std::abs(deviation - pick_side), std::abs(deviation), std::abs(pick_side));

  res["obs_7_8"] = membership(rep.R + rep.R_star, sp, Space::a).residual;
  {
    const BilinearForm ric = ricci(rep.R, sp);
    const BilinearForm ric_c = ricci(rep.R_star, sp);
    res["ric_sym_equiv"] = rel(max_abs(antisym_part(ric) + antisym_part(ric_c)), max_abs(ric), max_abs(ric_c));
  }
  res["conjugacy"] = rel_tensor(rep.R_star, conjugate(rep.R));
  {
    // lowered trace-free part and its three traces
    Array3 ct(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          double v = 0.0;
          for (int i = 0; i < n; ++i) v += rep.c_tilde(i, j, k) * g(i, w);
          ct(j, k, w) = v;
        }
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
      double t1 = 0.0, t2 = 0.0, t3 = 0.0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          t1 += G(x, y) * ct(a, x, y);
          t2 += G(x, y) * ct(x, a, y);
          t3 += G(x, y) * ct(x, y, a);
        }
      worst = std::max({worst, std::abs(t1), std::abs(t2), std::abs(t3)});
    }
    res["c_tilde_trace"] = rel(worst, pg.c_flat.max_norm(), 0.0);
  }
  res["membership_r"] = std::max(membership(rep.R, sp, Space::r).residual, membership(rep.R_star, sp, Space::r).residual);
  return rep;
}

PolyChart random_poly_chart(int p, int q, std::uint64_t seed, std::uint64_t index, double metric_scale,
                            double cubic_scale) {
  const int n = p + q;
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "chart dimension must be at least 3");
  Stream rng(seed, "poly_chart", index);
  PolyChart chart(n);

  std::vector<Polynomial::Exponents> monomials;
  monomials.emplace_back(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    Polynomial::Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(a)] = 1;
    monomials.push_back(e);
    for (int b = a; b < n; ++b) {
      Polynomial::Exponents f = e;
      f[static_cast<std::size_t>(b)] += 1;
      monomials.push_back(f);
    }
  }
  auto random_poly = [&](double scale) {
    Polynomial poly(n);
    for (const auto& e : monomials) poly.add_term(e, scale * rng.uniform());
    return poly;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Polynomial entry = random_poly(metric_scale);
      if (i == j) entry += Polynomial::constant(n, i < p ? 1.0 : -1.0);
      chart.set_metric(i, j, entry);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) chart.set_cubic(i, j, k, random_poly(cubic_scale));
  chart.domain_note = "diag(signature) plus a small quadratic perturbation; nondegenerate near the origin";
  return chart;
}

} // namespace eqcurv
