#include "tensor.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace eqcurv {

Curvature4Tensor::Curvature4Tensor(int dim)
    : n_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "tensor dimension must be positive");
}

Curvature4Tensor::Curvature4Tensor(int dim, std::vector<double> entries)
    : n_(dim), data_(std::move(entries)) {
  const auto expected = static_cast<std::size_t>(dim) * dim * dim * dim;
  if (dim < 1) fail(ErrorCode::InvalidArgument, "tensor dimension must be positive");
  if (data_.size() != expected)
    fail(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) + " entries, got " +
                                        std::to_string(data_.size()));
}

Curvature4Tensor Curvature4Tensor::permuted(const std::array<int, 4>& perm) const {
  return generate(n_, [&](int i, int j, int k, int l) {
    const std::array<int, 4> a{i, j, k, l};
    return (*this)(a[perm[0]], a[perm[1]], a[perm[2]], a[perm[3]]);
  });
}

double Curvature4Tensor::max_norm() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Curvature4Tensor::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Curvature4Tensor& Curvature4Tensor::operator+=(const Curvature4Tensor& o) {
  require_same_dim(n_, o.n_, "tensor addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Curvature4Tensor& Curvature4Tensor::operator-=(const Curvature4Tensor& o) {
  require_same_dim(n_, o.n_, "tensor subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Curvature4Tensor& Curvature4Tensor::operator*=(double s) noexcept {
  for (double& v : data_) v *= s;
  return *this;
}

double relative_residual(const Curvature4Tensor& a, const Curvature4Tensor& b, double ref_scale,
                         double floor) {
  require_same_dim(a.dim(), b.dim(), "relative_residual");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  if (m == 0.0) return 0.0;
  return m / std::max(ref_scale, floor);
}

double Array3::max_norm() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

} // namespace eqcurv
