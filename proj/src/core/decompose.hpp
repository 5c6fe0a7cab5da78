#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "curvature.hpp"

namespace eqcurv {

enum class Mode { W, A, ST };

std::string_view to_string(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view tag) noexcept;

using Components = std::array<Curvature4Tensor, 8>;

/// Closed-form projections pi_1..pi_8 (index 0..7). No validation: applied
/// verbatim to whatever tensor is passed.
Components w_components(const Curvature4Tensor& r, const ScalarProduct& g);
/// Closed-form projections alpha_1..alpha_8.
Components a_components(const Curvature4Tensor& r, const ScalarProduct& g);
Components components(Mode mode, const Curvature4Tensor& r, const ScalarProduct& g);

struct DecompositionResult {
  Mode mode = Mode::W;
  std::vector<Curvature4Tensor> components;
  double completeness_residual = 0.0;
  Matrix orthogonality_matrix;
  /// max_{i != j} |<X_i, X_j>| / (|g^{-1}|_2^4 |X_i|_F |X_j|_F).
  double orthogonality_residual = 0.0;
};

DecompositionResult w_decompose(const Curvature4Tensor& r, const ScalarProduct& g,
                                double tol = kDefaultTolerance);
DecompositionResult a_decompose(const Curvature4Tensor& r, const ScalarProduct& g,
                                double tol = kDefaultTolerance);
/// (u, z, w) = (alpha_1, alpha_2, alpha_6) of an algebraic tensor.
DecompositionResult singer_thorpe(const Curvature4Tensor& a, const ScalarProduct& g,
                                  double tol = kDefaultTolerance);
DecompositionResult decompose(Mode mode, const Curvature4Tensor& r, const ScalarProduct& g,
                              double tol = kDefaultTolerance);

/// |pairing| / (|g^{-1}|_2^4 |x|_F |y|_F); 0 when either tensor is below
/// 1e-10 * reference in Frobenius norm.
double scaled_pairing(double pairing, const Curvature4Tensor& x, const Curvature4Tensor& y, const ScalarProduct& g,
                      double reference);

/// Pairing-based diagnostics for any list of tensors summing to `source`.
void fill_diagnostics(DecompositionResult& out, const Curvature4Tensor& source, const ScalarProduct& g);

/// Matrix of the linear map T -> X_j(bianchi_project(T)) on the n^4 coefficient space.
class ProjectionFamily {
public:
  ProjectionFamily(Mode mode, const ScalarProduct& g);

  Mode mode() const noexcept { return mode_; }
  int dim() const noexcept { return n_; }
  /// j in 1..8.
  const Matrix& matrix(int j) const { return maps_.at(static_cast<std::size_t>(j - 1)); }
  /// Matrix of bianchi_project itself.
  const Matrix& bianchi() const noexcept { return bianchi_; }

private:
  Mode mode_;
  int n_;
  std::vector<Matrix> maps_;
  Matrix bianchi_;
};

/// R - pi_1(R) - pi_2(R) - pi_3(R).
Curvature4Tensor projective_part(const Curvature4Tensor& r, const ScalarProduct& g,
                                 double tol = kDefaultTolerance);
/// R + Ric ^ g / (n-1); agrees with projective_part on equiaffine tensors.
Curvature4Tensor projective_part_equiaffine(const Curvature4Tensor& r, const ScalarProduct& g);

/// Projection onto the Ricci- and Ricci*-flat tensors via the five-term
/// trace correction.
Curvature4Tensor traceless_core(const Curvature4Tensor& r, const ScalarProduct& g,
                                double tol = kDefaultTolerance);

struct BForms {
  BilinearForm b_star; // S[Ric* + (n-1)Ric] - tau g
  BilinearForm b;      // S[(n-1)Ric* + Ric] - tau g
};

BForms b_forms(const Curvature4Tensor& r, const ScalarProduct& g, double tol = kDefaultTolerance);

/// sigma_1(omega) + sigma_2(theta), lowered; its rho14 recovers omega + theta.
Curvature4Tensor sigma_split(const BilinearForm& omega, const BilinearForm& theta, const ScalarProduct& g);

struct EinsteinCheck {
  bool verdict = false;        // pi_2 and pi_3 vanish
  bool direct_verdict = false; // Ric = (tau/n) g
  double pi2_residual = 0.0;
  double pi3_residual = 0.0;
  double direct_residual = 0.0;
};

EinsteinCheck equiaffine_einstein_check(const Curvature4Tensor& r, const ScalarProduct& g,
                                        double tol = kDefaultTolerance);

/// Throws NotGeneralizedCurvature unless r passes membership in r.
void require_generalized(const Curvature4Tensor& r, const ScalarProduct& g, double tol);

} // namespace eqcurv
