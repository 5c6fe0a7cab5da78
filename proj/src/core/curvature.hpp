#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "linalg.hpp"
#include "tensor.hpp"

namespace eqcurv {

/// Subspaces of the rank-4 tensor space that carry a membership predicate.
enum class Space { co, r, a, s, f, p, t };

std::string_view to_string(Space s) noexcept;
std::optional<Space> parse_space(std::string_view tag) noexcept;

inline constexpr double kDefaultTolerance = 1e-10;

/// (h ^_r k)_{ijkl} = h_ik k_jl - h_jk k_il - r (h_il k_jk - h_jl k_ik).
Curvature4Tensor wedge_r(const BilinearForm& h, const BilinearForm& k, double r = 0.0);

/// (h . k)_{ijkl} = h_ij k_kl.
Curvature4Tensor dot_product(const BilinearForm& h, const BilinearForm& k);

/// R*_{ijkl} = -R_{ijlk}.
Curvature4Tensor conjugate(const Curvature4Tensor& r);

struct RicciReport {
  BilinearForm rho13, rho14, rho23, rho24, rho34;
  BilinearForm ric;      // rho14
  BilinearForm ric_star; // rho23
  double tau = 0.0;
};

RicciReport ricci_traces(const Curvature4Tensor& r, const ScalarProduct& g);

/// rho14 only; cheaper when the other traces are not needed.
BilinearForm ricci(const Curvature4Tensor& r, const ScalarProduct& g);
/// rho23 only.
BilinearForm ricci_star(const Curvature4Tensor& r, const ScalarProduct& g);

struct Membership {
  bool member = false;
  double residual = 0.0;
};

/// Residual-based test of the defining identities of `space`; residual is the
/// max-norm violation divided by max|R| (trace conditions additionally by
/// n * max|g^{-1}|), 0 for R = 0.
Membership membership(const Curvature4Tensor& r, const ScalarProduct& g, Space space,
                      double tol = kDefaultTolerance);

Curvature4Tensor psi(const Curvature4Tensor& r);
Curvature4Tensor mu(const Curvature4Tensor& r);
std::pair<Curvature4Tensor, Curvature4Tensor> psi_mu(const Curvature4Tensor& r);

/// (T_{ijkl} - T_{jikl}) / 2.
Curvature4Tensor antisymmetrize_first_pair(const Curvature4Tensor& t);
/// R(x,y,z,w) + R(y,z,x,w) + R(z,x,y,w).
Curvature4Tensor cyclic_sum(const Curvature4Tensor& t);
/// Orthogonal projector onto the generalized curvature tensors.
Curvature4Tensor bianchi_project(const Curvature4Tensor& t);

} // namespace eqcurv
