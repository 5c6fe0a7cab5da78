#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "curvature.hpp"
#include "polynomial.hpp"

namespace eqcurv {

/// Metric g_{ij}(x) and totally symmetric cubic form C_{ijk}(x) as polynomial
/// fields on a coordinate chart. Both are stored fully expanded; setters keep
/// every index permutation in sync.
class PolyChart {
public:
  PolyChart() = default;
  explicit PolyChart(int dim);

  int dim() const noexcept { return n_; }
  const Polynomial& metric(int i, int j) const { return metric_[idx2(i, j)]; }
  const Polynomial& cubic(int i, int j, int k) const { return cubic_[idx3(i, j, k)]; }
  void set_metric(int i, int j, const Polynomial& p);
  void set_cubic(int i, int j, int k, const Polynomial& p);

  std::string domain_note;

private:
  std::size_t idx2(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }
  std::size_t idx3(int i, int j, int k) const { return static_cast<std::size_t>((i * n_ + j) * n_ + k); }

  int n_ = 0;
  std::vector<Polynomial> metric_;
  std::vector<Polynomial> cubic_;
};

/// Exact values and first derivatives at a point.
struct PointGeometry {
  std::vector<double> point;
  Matrix g, ginv;
  Array3 gamma;              // Gamma^i_{jk} as (i,j,k)
  std::vector<Array3> dgamma; // [m](i,j,k) = d_m Gamma^i_{jk}
  Array3 c_flat;             // C_{jkl}
  Array3 c_op;               // C^i_{jk} as (i,j,k)
  std::vector<Array3> dc_op; // [m](i,j,k) = d_m C^i_{jk}
};

/// Throws DegenerateAtPoint when g(x) is degenerate.
PointGeometry evaluate_geometry(const PolyChart& chart, std::span<const double> point);

struct Christoffel {
  Array3 gamma;
  std::vector<Array3> dgamma;
};

Christoffel christoffel(const PolyChart& chart, std::span<const double> point);

enum class Connection { levi_civita, nabla, nabla_star };

/// Operator components O(j,k,l,i) = R_{jkl}^i of R(d_k, d_l) d_j for the
/// connection with coefficients gamma (i,j,k) and derivatives dgamma[m].
Curvature4Tensor curvature_operator(const Array3& gamma, const std::vector<Array3>& dgamma);
/// Lowers O(j,k,l,i) to the covariant tensor T(k,l,j,w) = O(j,k,l,i) g_{iw}.
Curvature4Tensor lower_operator(const Curvature4Tensor& op, const Matrix& g);

Curvature4Tensor curvature_at(const PolyChart& chart, std::span<const double> point, Connection which);

struct TripleReport {
  std::vector<double> point;
  Curvature4Tensor R, R_star, R_g;
  Array3 c_op;
  Eigen::VectorXd tchebychev_form;   // T_h = C^i_{hi} / n
  Eigen::VectorXd tchebychev_vector; // T^i
  Array3 c_tilde;                    // (i,j,k)
  double pick_invariant = 0.0;
  double tau = 0.0;
  double kappa = 0.0;
  double norm_c_sq = 0.0;
  double norm_t_sq = 0.0;
  std::map<std::string, double> identity_residuals;
};

TripleReport conjugate_triple_report(const PolyChart& chart, std::span<const double> point);

/// Chart with g = diag(signature) + metric_scale * (random degree <= 2
/// symmetric polynomial) and cubic form of coefficients cubic_scale * U(-1,1),
/// degree <= 2.
PolyChart random_poly_chart(int p, int q, std::uint64_t seed, std::uint64_t index, double metric_scale = 0.1,
                            double cubic_scale = 0.5);

} // namespace eqcurv
