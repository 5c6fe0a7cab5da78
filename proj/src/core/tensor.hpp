#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace eqcurv {

/// Rank-4 covariant tensor R_{ijkl} = R(e_i, e_j, e_k, e_l), stored row-major
/// with i varying slowest. Membership in any curvature space is a predicate
/// evaluated elsewhere; the value type itself carries no symmetry tag.
class Curvature4Tensor {
public:
  Curvature4Tensor() = default;
  explicit Curvature4Tensor(int dim);
  Curvature4Tensor(int dim, std::vector<double> entries);

  static Curvature4Tensor zero(int dim) { return Curvature4Tensor(dim); }

  /// Builds entry (i,j,k,l) from f(i,j,k,l).
  template <class F> static Curvature4Tensor generate(int dim, F&& f) {
    Curvature4Tensor t(dim);
    std::size_t idx = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          for (int l = 0; l < dim; ++l) t.data_[idx++] = f(i, j, k, l);
    return t;
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size(); }

  double operator()(int i, int j, int k, int l) const noexcept { return data_[offset(i, j, k, l)]; }
  double& operator()(int i, int j, int k, int l) noexcept { return data_[offset(i, j, k, l)]; }

  std::span<const double> entries() const noexcept { return data_; }
  std::span<double> entries() noexcept { return data_; }

  /// out(a0,a1,a2,a3) = this(a[perm[0]], a[perm[1]], a[perm[2]], a[perm[3]]).
  /// E.g. {1,0,3,2} yields T(y,x,w,z) as a function of (x,y,z,w).
  Curvature4Tensor permuted(const std::array<int, 4>& perm) const;

  double max_norm() const noexcept;
  double frobenius_norm() const noexcept;

  Curvature4Tensor& operator+=(const Curvature4Tensor& o);
  Curvature4Tensor& operator-=(const Curvature4Tensor& o);
  Curvature4Tensor& operator*=(double s) noexcept;

  friend Curvature4Tensor operator+(Curvature4Tensor a, const Curvature4Tensor& b) { return a += b; }
  friend Curvature4Tensor operator-(Curvature4Tensor a, const Curvature4Tensor& b) { return a -= b; }
  friend Curvature4Tensor operator-(Curvature4Tensor a) { return a *= -1.0; }
  friend Curvature4Tensor operator*(double s, Curvature4Tensor a) { return a *= s; }
  friend Curvature4Tensor operator*(Curvature4Tensor a, double s) { return a *= s; }

  bool operator==(const Curvature4Tensor&) const = default;

private:
  std::size_t offset(int i, int j, int k, int l) const noexcept {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// max|a - b| / max(|ref|_max, floor); the standard relative residual used by
/// every identity check in the library.
double relative_residual(const Curvature4Tensor& a, const Curvature4Tensor& b,
                         double ref_scale, double floor = 1e-300);

/// Dense rank-3 array indexed (a,b,c), row-major. Used for connection
/// coefficients Γ^a_{bc} and cubic forms.
class Array3 {
public:
  Array3() = default;
  explicit Array3(int dim) : n_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

  int dim() const noexcept { return n_; }
  double operator()(int a, int b, int c) const noexcept { return data_[(a * n_ + b) * n_ + c]; }
  double& operator()(int a, int b, int c) noexcept { return data_[(a * n_ + b) * n_ + c]; }
  std::span<const double> entries() const noexcept { return data_; }
  double max_norm() const noexcept;

private:
  int n_ = 0;
  std::vector<double> data_;
};

} // namespace eqcurv
