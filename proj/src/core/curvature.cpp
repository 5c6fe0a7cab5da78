#include "curvature.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace eqcurv {

std::string_view to_string(Space s) noexcept {
  switch (s) {
  case Space::co: return "co";
  case Space::r: return "r";
  case Space::a: return "a";
  case Space::s: return "s";
  case Space::f: return "f";
  case Space::p: return "p";
  case Space::t: return "t";
  }
  return "?";
}

std::optional<Space> parse_space(std::string_view tag) noexcept {
  static constexpr std::array all{Space::co, Space::r, Space::a, Space::s, Space::f, Space::p, Space::t};
  for (Space s : all)
    if (to_string(s) == tag) return s;
  return std::nullopt;
}

Curvature4Tensor wedge_r(const BilinearForm& h, const BilinearForm& k, double r) {
  const int n = static_cast<int>(h.rows());
  require_same_dim(n, static_cast<int>(k.rows()), "wedge_r");
  return Curvature4Tensor::generate(n, [&](int i, int j, int a, int b) {
    return h(i, a) * k(j, b) - h(j, a) * k(i, b) - r * (h(i, b) * k(j, a) - h(j, b) * k(i, a));
  });
}

Curvature4Tensor dot_product(const BilinearForm& h, const BilinearForm& k) {
  const int n = static_cast<int>(h.rows());
  require_same_dim(n, static_cast<int>(k.rows()), "dot_product");
  return Curvature4Tensor::generate(n, [&](int i, int j, int a, int b) { return h(i, j) * k(a, b); });
}

Curvature4Tensor conjugate(const Curvature4Tensor& r) { return -r.permuted({0, 1, 3, 2}); }

namespace {

// out(a,b) = G^{ij} R(slots) where the two contracted slots get i,j and the
// free slots get a,b in order.
BilinearForm trace_pair(const Curvature4Tensor& r, const Matrix& ginv, int si, int sj) {
  const int n = r.dim();
  BilinearForm out = BilinearForm::Zero(n, n);
  int free0 = -1, free1 = -1;
  for (int s = 0; s < 4; ++s)
    if (s != si && s != sj) (free0 < 0 ? free0 : free1) = s;
  std::array<int, 4> idx{};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double gij = ginv(i, j);
          if (gij == 0.0) continue;
          idx[si] = i;
          idx[sj] = j;
          idx[free0] = a;
          idx[free1] = b;
          acc += gij * r(idx[0], idx[1], idx[2], idx[3]);
        }
      out(a, b) = acc;
    }
  return out;
}

} // namespace

RicciReport ricci_traces(const Curvature4Tensor& r, const ScalarProduct& g) {
  require_same_dim(r.dim(), g.dim(), "ricci_traces");
  const Matrix& gi = g.inverse();
  RicciReport rep;
  rep.rho13 = trace_pair(r, gi, 0, 2);
  rep.rho14 = trace_pair(r, gi, 0, 3);
  rep.rho23 = trace_pair(r, gi, 1, 2);
  rep.rho24 = trace_pair(r, gi, 1, 3);
  rep.rho34 = trace_pair(r, gi, 2, 3);
  rep.ric = rep.rho14;
  rep.ric_star = rep.rho23;
  rep.tau = (gi.array() * rep.ric.array()).sum();
  return rep;
}

BilinearForm ricci(const Curvature4Tensor& r, const ScalarProduct& g) {
  require_same_dim(r.dim(), g.dim(), "ricci");
  return trace_pair(r, g.inverse(), 0, 3);
}

BilinearForm ricci_star(const Curvature4Tensor& r, const ScalarProduct& g) {
  require_same_dim(r.dim(), g.dim(), "ricci_star");
  return trace_pair(r, g.inverse(), 1, 2);
}

namespace {

double max_abs_sum(const Curvature4Tensor& a, const Curvature4Tensor& b, double sign) {
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] + sign * eb[i]));
  return m;
}

} // namespace

Membership membership(const Curvature4Tensor& r, const ScalarProduct& g, Space space, double tol) {
  require_same_dim(r.dim(), g.dim(), "membership");
  const double scale = r.max_norm();
  if (scale == 0.0) return {true, 0.0};

  double res = max_abs_sum(r, r.permuted({1, 0, 2, 3}), +1.0);
  if (space != Space::co) res = std::max(res, cyclic_sum(r).max_norm());

  const double trace_scale = scale * r.dim() * std::max(max_abs(g.inverse()), 1e-300);
  switch (space) {
  case Space::co:
  case Space::r: break;
  case Space::a: res = std::max(res, max_abs_sum(r, r.permuted({0, 1, 3, 2}), +1.0)); break;
  case Space::s: res = std::max(res, max_abs_sum(r, r.permuted({0, 1, 3, 2}), -1.0)); break;
  case Space::f:
    res = std::max(res, max_abs(antisym_part(ricci(r, g))) * scale / trace_scale);
    break;
  case Space::p: res = std::max(res, max_abs(ricci(r, g)) * scale / trace_scale); break;
  case Space::t:
    res = std::max(res, std::max(max_abs(ricci(r, g)), max_abs(ricci_star(r, g))) * scale / trace_scale);
    break;
  }
  res /= scale;
  return {res <= tol, res};
}

Curvature4Tensor psi(const Curvature4Tensor& r) {
  Curvature4Tensor out = r;
  out += r.permuted({1, 0, 3, 2});
  out += r.permuted({2, 3, 0, 1});
  out += r.permuted({3, 2, 1, 0});
  return out *= 0.25;
}

Curvature4Tensor mu(const Curvature4Tensor& r) {
  Curvature4Tensor out = 3.0 * r;
  out += 3.0 * r.permuted({0, 1, 3, 2});
  out += r.permuted({0, 3, 2, 1});
  out += r.permuted({0, 2, 3, 1});
  out += r.permuted({3, 1, 2, 0});
  out += r.permuted({2, 1, 3, 0});
  return out *= 0.125;
}

std::pair<Curvature4Tensor, Curvature4Tensor> psi_mu(const Curvature4Tensor& r) { return {psi(r), mu(r)}; }

Curvature4Tensor antisymmetrize_first_pair(const Curvature4Tensor& t) {
  return 0.5 * (t - t.permuted({1, 0, 2, 3}));
}

Curvature4Tensor cyclic_sum(const Curvature4Tensor& t) {
  return t + t.permuted({1, 2, 0, 3}) + t.permuted({2, 0, 1, 3});
}

Curvature4Tensor bianchi_project(const Curvature4Tensor& t) {
  const Curvature4Tensor a = antisymmetrize_first_pair(t);
  return a - (1.0 / 3.0) * cyclic_sum(a);
}

} // namespace eqcurv
