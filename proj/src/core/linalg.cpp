#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace eqcurv {

ScalarProduct ScalarProduct::build(const Matrix& g) {
  if (g.rows() != g.cols())
    fail(ErrorCode::InvalidArgument, "scalar product matrix must be square");
  const int n = static_cast<int>(g.rows());
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 3, got " + std::to_string(n));
  const double asym = max_abs(g - g.transpose());
  if (asym > kSymmetryTolerance)
    fail(ErrorCode::NotSymmetric, "scalar product asymmetry " + std::to_string(asym) + " exceeds 1e-12");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!std::isfinite(g(i, j))) fail(ErrorCode::InvalidArgument, "scalar product has non-finite entry");

  const Matrix sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const auto& ev = es.eigenvalues();
  const double spectral = ev.cwiseAbs().maxCoeff();
  ScalarProduct out;
  for (int i = 0; i < n; ++i) {
    if (!(std::abs(ev(i)) >= kDegeneracyThreshold * spectral) || spectral == 0.0)
      fail(ErrorCode::DegenerateMetric, "eigenvalue " + std::to_string(ev(i)) +
                                            " below degeneracy threshold");
    (ev(i) > 0 ? out.p_ : out.q_) += 1;
  }
  out.g_ = sym;
  out.ginv_ = es.eigenvectors() * ev.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  out.ginv_ = 0.5 * (out.ginv_ + out.ginv_.transpose()).eval();
  return out;
}

ScalarProduct ScalarProduct::standard(int p, int q) {
  if (p < 0 || q < 0) fail(ErrorCode::InvalidArgument, "signature entries must be nonnegative");
  Matrix g = Matrix::Zero(p + q, p + q);
  for (int i = 0; i < p + q; ++i) g(i, i) = i < p ? 1.0 : -1.0;
  return build(g);
}

ScalarProduct ScalarProduct::scaled(double c) const {
  if (!(c > 0.0)) fail(ErrorCode::InvalidArgument, "rescale factor must be positive");
  ScalarProduct out = *this;
  out.g_ *= c;
  out.ginv_ /= c;
  return out;
}

BilinearForm sym_part(const BilinearForm& b) { return 0.5 * (b + b.transpose()); }

BilinearForm antisym_part(const BilinearForm& b) { return 0.5 * (b - b.transpose()); }

std::pair<BilinearForm, BilinearForm> sym_antisym_split(const BilinearForm& b) {
  return {sym_part(b), antisym_part(b)};
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double trace_g(const BilinearForm& b, const ScalarProduct& g) {
  require_same_dim(static_cast<int>(b.rows()), g.dim(), "trace_g");
  return (g.inverse().array() * b.array()).sum();
}

namespace {

// Contracts slot `slot` of t with m: out(..a..) = m(a,b) t(..b..).
Curvature4Tensor contract_slot(const Curvature4Tensor& t, const Matrix& m, int slot) {
  const int n = t.dim();
  Curvature4Tensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int b = 0; b < n; ++b) {
            switch (slot) {
            case 0: s += m(i, b) * t(b, j, k, l); break;
            case 1: s += m(j, b) * t(i, b, k, l); break;
            case 2: s += m(k, b) * t(i, j, b, l); break;
            default: s += m(l, b) * t(i, j, k, b); break;
            }
          }
          out(i, j, k, l) = s;
        }
  return out;
}

} // namespace

Curvature4Tensor raise_all(const Curvature4Tensor& t, const Matrix& ginv) {
  require_same_dim(t.dim(), static_cast<int>(ginv.rows()), "raise_all");
  Curvature4Tensor out = t;
  for (int slot = 0; slot < 4; ++slot) out = contract_slot(out, ginv, slot);
  return out;
}

double tensor_pairing(const Curvature4Tensor& t1, const Curvature4Tensor& t2, const ScalarProduct& g) {
  require_same_dim(t1.dim(), t2.dim(), "tensor_pairing");
  require_same_dim(t1.dim(), g.dim(), "tensor_pairing");
  const Curvature4Tensor up = raise_all(t2, g.inverse());
  const auto a = t1.entries();
  const auto b = up.entries();
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Eigen::VectorXd to_vector(const Curvature4Tensor& t) {
  const auto e = t.entries();
  return Eigen::Map<const Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
}

Curvature4Tensor from_vector(int dim, const Eigen::VectorXd& v) {
  return Curvature4Tensor(dim, std::vector<double>(v.data(), v.data() + v.size()));
}

} // namespace eqcurv
