#include "decompose.hpp"

#include <cmath>

#include "error.hpp"

namespace eqcurv {

std::string_view to_string(Mode m) noexcept {
  switch (m) {
  case Mode::W: return "w";
  case Mode::A: return "a";
  case Mode::ST: return "st";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view tag) noexcept {
  if (tag == "w" || tag == "W") return Mode::W;
  if (tag == "a" || tag == "A") return Mode::A;
  if (tag == "st" || tag == "ST") return Mode::ST;
  return std::nullopt;
}

namespace {

struct Traces {
  BilinearForm ric, ric_star;
  double tau;
};

Traces traces(const Curvature4Tensor& r, const ScalarProduct& g) {
  Traces t{ricci(r, g), ricci_star(r, g), 0.0};
  t.tau = (g.inverse().array() * t.ric.array()).sum();
  return t;
}

} // namespace

Components w_components(const Curvature4Tensor& r, const ScalarProduct& g) {
  require_same_dim(r.dim(), g.dim(), "w_components");
  const double n = g.dim();
  const Matrix& gm = g.matrix();
  const auto [ric, rs, tau] = traces(r, g);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  const Curvature4Tensor ps = psi(r);
  const Curvature4Tensor mu_r = mu(r);
  const BilinearForm lric = antisym_part(ric);
  const BilinearForm lrs = antisym_part(rs);

  Components p;
  p[0] = (-tau / (n * (n - 1))) * gg;
  p[1] = (1.0 / (n - 1)) * wedge_r((tau / n) * gm - sym_part(ric), gm, 0.0);
  p[2] = (-1.0 / (n + 1)) * (2.0 * dot_product(lric, gm) + wedge_r(lric, gm, 0.0));
  p[3] = (-1.0 / (n * n - 4)) * (2.0 * dot_product(lrs, gm) + wedge_r(lrs, gm, n + 1)) -
         (3.0 / ((n * n - 4) * (n + 1))) * (2.0 * dot_product(lric, gm) + wedge_r(lric, gm, n + 1));
  p[4] = (1.0 / ((n - 1) * (n - 2))) *
         (tau * gg - (1.0 / n) * wedge_r(sym_part(ric + (n - 1) * rs), gm, n - 1));
  p[5] = ps + (1.0 / (2 * (n - 2))) * wedge_r(sym_part(ric + rs), gm, 1.0) -
         (tau / ((n - 1) * (n - 2))) * gg;
  const BilinearForm l7 = antisym_part(3.0 * ric - rs);
  p[6] = mu_r + (1.0 / (2 * n)) * wedge_r(sym_part(ric - rs), gm, -1.0) +
         (1.0 / (2 * (n + 2))) * dot_product(l7, gm) + (1.0 / (4 * (n + 2))) * wedge_r(l7, gm, -1.0);
  const BilinearForm l8 = antisym_part(ric + rs);
  p[7] = r - ps - mu_r + (1.0 / (2 * (n - 2))) * dot_product(l8, gm) +
         (1.0 / (4 * (n - 2))) * wedge_r(l8, gm, 3.0);
  return p;
}

Components a_components(const Curvature4Tensor& r, const ScalarProduct& g) {
  require_same_dim(r.dim(), g.dim(), "a_components");
  const double n = g.dim();
  const Matrix& gm = g.matrix();
  const auto [ric, rs, tau] = traces(r, g);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  const Curvature4Tensor ps = psi(r);
  const Curvature4Tensor mu_r = mu(r);

  Components a;
  a[0] = (-tau / (n * (n - 1))) * gg;
  a[1] = (-1.0 / (2 * (n - 2))) * wedge_r(sym_part(ric + rs), gm, 1.0) + (2 * tau / (n * (n - 2))) * gg;
  a[2] = (-1.0 / (2 * n)) * wedge_r(sym_part(ric - rs), gm, -1.0);
  const BilinearForm l4 = antisym_part(3.0 * ric - rs);
  a[3] = (-1.0 / (4 * (n + 2))) * (2.0 * dot_product(l4, gm) + wedge_r(l4, gm, -1.0));
  const BilinearForm l5 = antisym_part(ric + rs);
  a[4] = (-1.0 / (4 * (n - 2))) * (2.0 * dot_product(l5, gm) + wedge_r(l5, gm, 3.0));
  a[5] = ps - a[0] - a[1];
  a[6] = mu_r - a[2] - a[3];
  a[7] = r - mu_r - ps - a[4];
  return a;
}

Components components(Mode mode, const Curvature4Tensor& r, const ScalarProduct& g) {
  if (mode == Mode::A) return a_components(r, g);
  if (mode == Mode::W) return w_components(r, g);
  fail(ErrorCode::InvalidArgument, "components: mode must be w or a");
}

void require_generalized(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  const auto m = membership(r, g, Space::r, tol);
  if (!m.member)
    fail(ErrorCode::NotGeneralizedCurvature,
         "input is not a generalized curvature tensor (residual " + std::to_string(m.residual) + ")");
}

double scaled_pairing(double pairing, const Curvature4Tensor& x, const Curvature4Tensor& y, const ScalarProduct& g,
                      double reference) {
  const double fx = x.frobenius_norm();
  const double fy = y.frobenius_norm();
  const double floor = 1e-10 * reference;
  if (fx <= floor || fy <= floor) return 0.0;
  const double s = g.inverse().operatorNorm();
  return std::abs(pairing) / (s * s * s * s * fx * fy);
}

void fill_diagnostics(DecompositionResult& out, const Curvature4Tensor& source, const ScalarProduct& g) {
  Curvature4Tensor sum(source.dim());
  for (const auto& c : out.components) sum += c;
  out.completeness_residual = relative_residual(sum, source, source.max_norm());

  const auto k = static_cast<Eigen::Index>(out.components.size());
  out.orthogonality_matrix = Matrix::Zero(k, k);
  std::vector<Curvature4Tensor> raised;
  raised.reserve(out.components.size());
  for (const auto& c : out.components) raised.push_back(raise_all(c, g.inverse()));
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      const auto a = out.components[i].entries();
      const auto b = raised[j].entries();
      double s = 0.0;
      for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
      out.orthogonality_matrix(i, j) = out.orthogonality_matrix(j, i) = s;
    }

  out.orthogonality_residual = 0.0;
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j)
      out.orthogonality_residual =
          std::max(out.orthogonality_residual,
                   scaled_pairing(out.orthogonality_matrix(i, j), out.components[i], out.components[j], g,
                                  source.frobenius_norm()));
}

DecompositionResult w_decompose(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "w_decompose");
  require_generalized(r, g, tol);
  const auto c = w_components(r, g);
  DecompositionResult out;
  out.mode = Mode::W;
  out.components.assign(c.begin(), c.end());
  fill_diagnostics(out, r, g);
  return out;
}

DecompositionResult a_decompose(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "a_decompose");
  require_generalized(r, g, tol);
  const auto c = a_components(r, g);
  DecompositionResult out;
  out.mode = Mode::A;
  out.components.assign(c.begin(), c.end());
  fill_diagnostics(out, r, g);
  return out;
}

DecompositionResult singer_thorpe(const Curvature4Tensor& a, const ScalarProduct& g, double tol) {
  require_same_dim(a.dim(), g.dim(), "singer_thorpe");
  const auto m = membership(a, g, Space::a, tol);
  if (!m.member)
    fail(ErrorCode::NotAlgebraic,
         "input is not an algebraic curvature tensor (residual " + std::to_string(m.residual) + ")");
  const auto c = a_components(a, g);
  DecompositionResult out;
  out.mode = Mode::ST;
  out.components = {c[0], c[1], c[5]};
  fill_diagnostics(out, a, g);
  return out;
}

DecompositionResult decompose(Mode mode, const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  switch (mode) {
  case Mode::W: return w_decompose(r, g, tol);
  case Mode::A: return a_decompose(r, g, tol);
  case Mode::ST: return singer_thorpe(r, g, tol);
  }
  fail(ErrorCode::InvalidArgument, "unknown decomposition mode");
}

ProjectionFamily::ProjectionFamily(Mode mode, const ScalarProduct& g) : mode_(mode), n_(g.dim()) {
  if (mode == Mode::ST) fail(ErrorCode::InvalidArgument, "projection family needs mode w or a");
  const auto size = static_cast<Eigen::Index>(n_) * n_ * n_ * n_;
  maps_.assign(8, Matrix::Zero(size, size));
  bianchi_ = Matrix::Zero(size, size);
  for (Eigen::Index c = 0; c < size; ++c) {
    Curvature4Tensor e(n_);
    e.entries()[static_cast<std::size_t>(c)] = 1.0;
    const Curvature4Tensor b = bianchi_project(e);
    bianchi_.col(c) = to_vector(b);
    const auto parts = components(mode, b, g);
    for (int j = 0; j < 8; ++j) maps_[static_cast<std::size_t>(j)].col(c) = to_vector(parts[j]);
  }
}

Curvature4Tensor projective_part(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "projective_part");
  require_generalized(r, g, tol);
  const auto p = w_components(r, g);
  return r - p[0] - p[1] - p[2];
}

Curvature4Tensor projective_part_equiaffine(const Curvature4Tensor& r, const ScalarProduct& g) {
  const double n = g.dim();
  return r + (1.0 / (n - 1)) * wedge_r(ricci(r, g), g.matrix(), 0.0);
}

Curvature4Tensor traceless_core(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "traceless_core");
  require_generalized(r, g, tol);
  const double n = g.dim();
  const Matrix& gm = g.matrix();
  const auto [ric, rs, tau] = traces(r, g);
  Curvature4Tensor out = r;
  out += (2.0 / (n * n - 4)) * dot_product(antisym_part((n - 1) * ric + rs), gm);
  out += (1.0 / (n * n - 1)) * wedge_r((n - 1) * antisym_part(ric) + (n + 1) * sym_part(ric), gm, 0.0);
  out += (1.0 / ((n * n - 4) * (n + 1))) * wedge_r(antisym_part(3.0 * ric + (n + 1) * rs), gm, n + 1);
  out += (1.0 / (n * (n - 1) * (n - 2))) * wedge_r(sym_part(ric + (n - 1) * rs), gm, n - 1);
  out -= (tau / ((n - 1) * (n - 2))) * wedge_r(gm, gm, 0.0);
  return out;
}

BForms b_forms(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "b_forms");
  require_generalized(r, g, tol);
  const double n = g.dim();
  const auto [ric, rs, tau] = traces(r, g);
  return {sym_part(rs + (n - 1) * ric) - tau * g.matrix(), sym_part((n - 1) * rs + ric) - tau * g.matrix()};
}

Curvature4Tensor sigma_split(const BilinearForm& omega, const BilinearForm& theta, const ScalarProduct& g) {
  const int n = g.dim();
  require_same_dim(static_cast<int>(omega.rows()), n, "sigma_split");
  require_same_dim(static_cast<int>(theta.rows()), n, "sigma_split");
  const double so = std::max(max_abs(omega), 1.0);
  const double st = std::max(max_abs(theta), 1.0);
  if (max_abs(omega + omega.transpose()) > 1e-10 * so)
    fail(ErrorCode::FormSymmetryViolation, "omega is not antisymmetric");
  if (max_abs(theta - theta.transpose()) > 1e-10 * st)
    fail(ErrorCode::FormSymmetryViolation, "theta is not symmetric");
  const Matrix& gm = g.matrix();
  const double dn = n;
  return Curvature4Tensor::generate(n, [&](int x, int y, int z, int w) {
    const double s1 = 2 * omega(x, y) * gm(z, w) + omega(x, z) * gm(y, w) - omega(y, z) * gm(x, w);
    const double s2 = theta(x, z) * gm(y, w) - theta(y, z) * gm(x, w);
    return (-1.0 / (1 + dn)) * s1 + (1.0 / (1 - dn)) * s2;
  });
}

EinsteinCheck equiaffine_einstein_check(const Curvature4Tensor& r, const ScalarProduct& g, double tol) {
  require_same_dim(r.dim(), g.dim(), "equiaffine_einstein_check");
  require_generalized(r, g, tol);
  const double scale = r.max_norm();
  EinsteinCheck out;
  if (scale == 0.0) {
    out.verdict = out.direct_verdict = true;
    return out;
  }
  const auto p = w_components(r, g);
  out.pi2_residual = p[1].max_norm() / scale;
  out.pi3_residual = p[2].max_norm() / scale;
  const auto [ric, rs, tau] = traces(r, g);
  const double n = g.dim();
  const double trace_scale = scale * n * max_abs(g.inverse());
  out.direct_residual = max_abs(ric - (tau / n) * g.matrix()) / trace_scale;
  out.verdict = std::max(out.pi2_residual, out.pi3_residual) <= tol;
  out.direct_verdict = out.direct_residual <= tol;
  return out;
}

} // namespace eqcurv
