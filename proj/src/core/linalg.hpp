#pragma once

#include <utility>

#include <Eigen/Dense>

#include "tensor.hpp"

namespace eqcurv {

using Matrix = Eigen::MatrixXd;

/// Rank-2 covariant tensor b_{ij}; no symmetry assumed.
using BilinearForm = Eigen::MatrixXd;

/// Nondegenerate symmetric bilinear form of signature (p,q) with cached inverse.
class ScalarProduct {
public:
  static constexpr double kSymmetryTolerance = 1e-12;
  static constexpr double kDegeneracyThreshold = 1e-10;

  /// Validates symmetry, dimension and nondegeneracy, then caches the inverse
  /// and the eigenvalue sign counts.
  static ScalarProduct build(const Matrix& g);
  /// diag(+1 x p, -1 x q).
  static ScalarProduct standard(int p, int q);

  int dim() const noexcept { return static_cast<int>(g_.rows()); }
  const Matrix& matrix() const noexcept { return g_; }
  const Matrix& inverse() const noexcept { return ginv_; }
  std::pair<int, int> signature() const noexcept { return {p_, q_}; }
  double operator()(int i, int j) const noexcept { return g_(i, j); }

  /// c*g for c > 0; same signature.
  ScalarProduct scaled(double c) const;

private:
  ScalarProduct() = default;

  Matrix g_;
  Matrix ginv_;
  int p_ = 0;
  int q_ = 0;
};

BilinearForm sym_part(const BilinearForm& b);
BilinearForm antisym_part(const BilinearForm& b);
std::pair<BilinearForm, BilinearForm> sym_antisym_split(const BilinearForm& b);

double max_abs(const Matrix& m);

/// g-trace g^{ij} b_{ij}.
double trace_g(const BilinearForm& b, const ScalarProduct& g);

/// Raises all four slots with g^{-1}: T^{abcd}.
Curvature4Tensor raise_all(const Curvature4Tensor& t, const Matrix& ginv);

/// g^{ia} g^{jb} g^{kc} g^{ld} T1_{ijkl} T2_{abcd}.
double tensor_pairing(const Curvature4Tensor& t1, const Curvature4Tensor& t2, const ScalarProduct& g);

/// Row-major flattening helpers between tensors and Eigen vectors.
Eigen::VectorXd to_vector(const Curvature4Tensor& t);
Curvature4Tensor from_vector(int dim, const Eigen::VectorXd& v);

} // namespace eqcurv
