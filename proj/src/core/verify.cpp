#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <set>

#include "error.hpp"
#include "sampling.hpp"

namespace eqcurv {

namespace {

// A predicate counts as "vanishing" below this relative residual in the
// two- and three-way equivalence checks.
constexpr double kVanish = 1e-6;

struct Case {
  int n;
  ScalarProduct g;
  std::string label;
};

struct Outcome {
  double residual = 0.0;
  std::vector<std::string> failures;

  void take(double r) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    residual = std::max(residual, r);
  }
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

class Gen {
public:
  Gen(const Case& c, std::uint64_t seed, const std::string& check)
      : c_(c), rng_(seed, check + "|" + c.label) {}

  int n() const { return c_.n; }
  const ScalarProduct& g() const { return c_.g; }

  Curvature4Tensor noise() { return uniform_tensor(c_.n, rng_); }
  Curvature4Tensor r() { return bianchi_project(noise()); }
  Curvature4Tensor alg() { return psi(r()); }
  Curvature4Tensor sym() { return mu(r()); }
  Curvature4Tensor a_plus_s() { return psi(r()) + mu(r()); }
  Curvature4Tensor f() {
    const Curvature4Tensor x = r();
    return x - w_components(x, c_.g)[2];
  }
  /// R and R* both equiaffine: a+s with the alpha_4 part removed.
  Curvature4Tensor ff() {
    const Curvature4Tensor x = a_plus_s();
    return x - a_components(x, c_.g)[3];
  }
  Curvature4Tensor complement() {
    const Curvature4Tensor x = r();
    return x - psi(x) - mu(x);
  }
  Curvature4Tensor proj() {
    const Curvature4Tensor x = r();
    const auto w = w_components(x, c_.g);
    return x - w[0] - w[1] - w[2];
  }
  Curvature4Tensor traceless() { return traceless_core(r(), c_.g, 1e-8); }
  Curvature4Tensor sigma_omega() { return sigma_split(antiform(), BilinearForm::Zero(c_.n, c_.n), c_.g); }
  Curvature4Tensor sigma_theta() { return sigma_split(BilinearForm::Zero(c_.n, c_.n), symform(), c_.g); }

  BilinearForm form() { return uniform_form(c_.n, rng_); }
  BilinearForm symform() { return sym_part(form()); }
  BilinearForm antiform() { return antisym_part(form()); }
  BilinearForm traceless_sym() {
    const BilinearForm s = symform();
    return s - (trace_g(s, c_.g) / c_.n) * c_.g.matrix();
  }
  double uniform() { return rng_.uniform(); }

private:
  const Case& c_;
  Stream rng_;
};

double tscale(const Curvature4Tensor& r) {
  const double m = r.max_norm();
  return m > 0.0 ? m : 1.0;
}

double fscale(const Curvature4Tensor& r, const ScalarProduct& g) {
  return tscale(r) * g.dim() * max_abs(g.inverse());
}

double sscale(const Curvature4Tensor& r, const ScalarProduct& g) {
  const double s = max_abs(g.inverse());
  return tscale(r) * g.dim() * g.dim() * s * s;
}

double dt(const Curvature4Tensor& a, const Curvature4Tensor& b, double s) { return (a - b).max_norm() / s; }
double nt(const Curvature4Tensor& a, double s) { return a.max_norm() / s; }
double df(const Matrix& a, const Matrix& b, double s) { return max_abs(a - b) / s; }
double nf(const Matrix& a, double s) { return max_abs(a) / s; }

/// Every sample either has all quantities vanishing or none; both kinds must
/// occur. Mixed samples contribute their largest quantity to the residual.
class Equivalence {
public:
  void add(std::initializer_list<double> qs) {
    bool any = false, all = true;
    double mx = 0.0;
    for (double q : qs) {
      const bool small = q <= kVanish;
      any = any || small;
      all = all && small;
      mx = std::max(mx, q);
    }
    if (any) residual_ = std::max(residual_, mx);
    if (all) ++vanishing_;
    if (!any) ++generic_;
  }
  void finish(Outcome& o, const std::string& what) const {
    o.take(residual_);
    o.require(vanishing_ > 0, what + ": no sample with vanishing predicates");
    o.require(generic_ > 0, what + ": no sample with nonvanishing predicates");
  }

private:
  double residual_ = 0.0;
  int vanishing_ = 0;
  int generic_ = 0;
};

using CheckFn = std::function<void(const Case&, Gen&, const SuiteConfig&, Outcome&)>;

struct CheckDef {
  std::string name;
  bool floating;
  CheckFn fn;
  std::function<bool(const Case&)> applies = [](const Case&) { return true; };
};

BilinearForm gmat(const Gen& gen) { return gen.g().matrix(); }

// --- decomposition checks -------------------------------------------------

void completeness(Mode mode, const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto c = components(mode, r, gen.g());
    Curvature4Tensor sum(gen.n());
    for (const auto& x : c) sum += x;
    o.take(dt(sum, r, tscale(r)));
  }
}

void idempotence(Mode mode, const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto c = components(mode, r, gen.g());
    for (std::size_t j = 0; j < 8; ++j) {
      const auto cc = components(mode, c[j], gen.g());
      for (std::size_t i = 0; i < 8; ++i) o.take(i == j ? dt(cc[i], c[j], tscale(r)) : nt(cc[i], tscale(r)));
    }
  }
}

void orthogonality(Mode mode, const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r1 = gen.r();
    const Curvature4Tensor r2 = gen.r();
    const auto c1 = components(mode, r1, gen.g());
    const auto c2 = components(mode, r2, gen.g());
    const double ref = std::max(r1.frobenius_norm(), r2.frobenius_norm());
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (i != j) o.take(scaled_pairing(tensor_pairing(c1[i], c2[j], gen.g()), c1[i], c2[j], gen.g(), ref));
  }
}

void gram_positivity(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (Mode mode : {Mode::W, Mode::A}) {
    std::vector<Components> cs;
    for (int s = 0; s < cfg.samples; ++s) cs.push_back(components(mode, gen.r(), gen.g()));
    for (std::size_t j = 0; j < 8; ++j) {
      const auto m = static_cast<Eigen::Index>(cs.size());
      Matrix gram(m, m);
      for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b)
          gram(a, b) = gram(b, a) = tensor_pairing(cs[a][j], cs[b][j], gen.g());
      Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
      const double top = es.eigenvalues().maxCoeff();
      const double bottom = es.eigenvalues().minCoeff();
      // empty components: Gram at roundoff level
      if (top <= 1e-20) continue;
      o.take(std::max(0.0, -bottom / top));
      for (Eigen::Index a = 0; a < m; ++a) o.require(gram(a, a) > 0.0, "nonzero component with nonpositive norm");
    }
  }
}

void lemma_6_1(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto w = w_components(r, gen.g());
    const auto a = a_components(r, gen.g());
    const double sc = tscale(r);
    o.take(dt(w[0], a[0], sc));
    o.take(dt(w[5], a[5], sc));
    o.take(dt(w[6], a[6], sc));
    o.take(dt(w[7], a[7], sc));
    o.take(dt(w[1] + w[4], a[1] + a[2], sc));
    o.take(dt(w[2] + w[3], a[3] + a[4], sc));
  }
}

// --- trace formulas -------------------------------------------------------

struct TraceData {
  BilinearForm ric, rs;
  double tau;
};

TraceData trace_data(const Curvature4Tensor& r, const ScalarProduct& g) {
  TraceData t{ricci(r, g), ricci_star(r, g), 0.0};
  t.tau = trace_g(t.ric, g);
  return t;
}

void lemma_4_5(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto [ric, rs, tau] = trace_data(r, g);
    const auto w = w_components(r, g);
    const double fs = fscale(r, g);
    o.take(df(ricci(w[0], g), (tau / n) * gm, fs));
    o.take(df(ricci(w[1], g), -(tau / n) * gm + sym_part(ric), fs));
    o.take(df(ricci(w[2], g), antisym_part(ric), fs));
    for (std::size_t j = 3; j < 8; ++j) o.take(nf(ricci(w[j], g), fs));
    for (std::size_t j = 1; j < 8; ++j) o.take(std::abs(trace_g(ricci(w[j], g), g)) / sscale(r, g));
  }
}

void lemma_4_6(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto [ric, rs, tau] = trace_data(r, g);
    const auto w = w_components(r, g);
    const double fs = fscale(r, g);
    o.take(df(ricci_star(w[0], g), (tau / n) * gm, fs));
    o.take(df(ricci_star(w[1], g), (1.0 / (n - 1)) * ((tau / n) * gm - sym_part(ric)), fs));
    o.take(df(ricci_star(w[2], g), (-3.0 / (n + 1)) * antisym_part(ric), fs));
    o.take(df(ricci_star(w[3], g), antisym_part(rs + (3.0 / (n + 1)) * ric), fs));
    o.take(df(ricci_star(w[4], g), -(tau / (n - 1)) * gm + sym_part((1.0 / (n - 1)) * ric + rs), fs));
    for (std::size_t j = 5; j < 8; ++j) o.take(nf(ricci_star(w[j], g), fs));
    for (std::size_t j = 1; j < 8; ++j) o.take(std::abs(trace_g(ricci_star(w[j], g), g)) / sscale(r, g));
  }
}

void lemma_5_5(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto [ric, rs, tau] = trace_data(r, g);
    const auto a = a_components(r, g);
    const double fs = fscale(r, g);
    o.take(df(ricci(a[0], g), (tau / n) * gm, fs));
    o.take(df(ricci(a[1], g), -(tau / n) * gm + 0.5 * sym_part(ric + rs), fs));
    o.take(df(ricci(a[2], g), 0.5 * sym_part(ric - rs), fs));
    o.take(df(ricci(a[3], g), 0.25 * antisym_part(3.0 * ric - rs), fs));
    o.take(df(ricci(a[4], g), 0.25 * antisym_part(ric + rs), fs));
    for (std::size_t j = 5; j < 8; ++j) o.take(nf(ricci(a[j], g), fs));
    for (std::size_t j = 1; j < 8; ++j) o.take(std::abs(trace_g(ricci(a[j], g), g)) / sscale(r, g));
  }
}

void lemma_5_6(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto a = a_components(r, g);
    const double fs = fscale(r, g);
    std::array<BilinearForm, 8> ric, rs;
    for (std::size_t j = 0; j < 8; ++j) {
      ric[j] = ricci(a[j], g);
      rs[j] = ricci_star(a[j], g);
    }
    o.take(df(rs[0], ric[0], fs));
    o.take(df(rs[1], ric[1], fs));
    o.take(df(rs[2], -ric[2], fs));
    o.take(df(rs[3], -ric[3], fs));
    o.take(df(rs[4], 3.0 * ric[4], fs));
    for (std::size_t j = 5; j < 8; ++j) o.take(nf(rs[j], fs));
    for (std::size_t j = 1; j < 8; ++j) o.take(std::abs(trace_g(rs[j], g)) / sscale(r, g));
  }
}

// --- vanishing criteria ---------------------------------------------------

/// Samples drawn from subspaces on which various trace conditions hold for
/// structural reasons, plus generic ones.
std::vector<Curvature4Tensor> mixed_samples(Gen& gen) {
  return {gen.r(), gen.sym(), gen.alg(), gen.proj(), gen.traceless(), gen.f(), gen.sigma_omega(), gen.sigma_theta(),
          gen.complement(), gen.a_plus_s()};
}

double vanishing_condition(Mode mode, int j, const Curvature4Tensor& x, const ScalarProduct& g) {
  const double n = g.dim();
  const Matrix& gm = g.matrix();
  const auto [ric, rs, tau] = trace_data(x, g);
  const double fs = fscale(x, g);
  if (mode == Mode::W) {
    switch (j) {
    case 1: return std::abs(tau) / sscale(x, g);
    case 2: return df(sym_part(ric), (tau / n) * gm, fs);
    case 3: return nf(antisym_part(ric), fs);
    case 4: return nf(antisym_part(rs + (3.0 / (n + 1)) * ric), fs);
    default: return df(sym_part((1.0 / (n - 1)) * ric + rs), (tau / (n - 1)) * gm, fs);
    }
  }
  switch (j) {
  case 1: return std::abs(tau) / sscale(x, g);
  case 2: return df(sym_part(ric + rs), (2.0 * tau / n) * gm, fs);
  case 3: return nf(sym_part(ric - rs), fs);
  case 4: return nf(antisym_part(3.0 * ric - rs), fs);
  default: return nf(antisym_part(ric + rs), fs);
  }
}

void vanishing(Mode mode, const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  std::array<Equivalence, 5> eq;
  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<Curvature4Tensor> xs = mixed_samples(gen);
    const Curvature4Tensor r = gen.r();
    const auto c = components(mode, r, g);
    for (std::size_t j = 0; j < 5; ++j) xs.push_back(r - c[j]);
    for (const auto& x : xs) {
      const auto cx = components(mode, x, g);
      for (int j = 1; j <= 5; ++j)
        eq[j - 1].add({nt(cx[j - 1], tscale(x)), vanishing_condition(mode, j, x, g)});
    }
  }
  const char* prefix = mode == Mode::W ? "pi_" : "alpha_";
  for (int j = 1; j <= 5; ++j) eq[j - 1].finish(o, prefix + std::to_string(j));
}

/// Residuals of "R* in r", "R in a+s" and "alpha_5 = alpha_8 = 0".
std::array<double, 3> conjugate_pair_quantities(const Curvature4Tensor& x, const ScalarProduct& g) {
  const double sc = tscale(x);
  const auto a = a_components(x, g);
  return {membership(conjugate(x), g, Space::r).residual, nt(x - psi(x) - mu(x), sc),
          std::max(nt(a[4], sc), nt(a[7], sc))};
}

void lemma_5_7_6(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  Equivalence eq;
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto a = a_components(r, gen.g());
    for (const auto& x : {gen.a_plus_s(), gen.alg(), gen.sym(), r, gen.complement(), r - a[4] - a[7]}) {
      const auto q = conjugate_pair_quantities(x, gen.g());
      eq.add({q[0], q[1], q[2]});
    }
  }
  eq.finish(o, "R* in r <=> R in a+s <=> alpha_5 = alpha_8 = 0");
}

void lemma_2_10(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  Equivalence eq;
  for (int s = 0; s < cfg.samples; ++s) {
    for (const auto& x : {gen.a_plus_s(), gen.alg(), gen.sym(), gen.r(), gen.complement()}) {
      const auto q = conjugate_pair_quantities(x, gen.g());
      eq.add({q[0], q[1]});
    }
  }
  eq.finish(o, "R* in r <=> R in a+s");
}

// --- conjugation laws -----------------------------------------------------

void remark_4_12(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.a_plus_s();
    const Curvature4Tensor xs = conjugate(x);
    o.take(dt(mu(x), 0.5 * (x - xs), tscale(x)));
    o.take(dt(psi(x), 0.5 * (x + xs), tscale(x)));
  }
}

void lemma_5_8(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.a_plus_s();
    const double sc = tscale(x);
    const auto a = a_components(x, g);
    const auto ac = a_components(conjugate(x), g);
    for (std::size_t j : {0, 1, 5}) {
      o.take(dt(ac[j], a[j], sc));
      o.take(dt(conjugate(a[j]), a[j], sc));
    }
    o.take(dt(ac[2], conjugate(a[2]), sc));
    o.take(dt(ac[2], -a[2], sc));
    o.take(dt(ac[3], -a[3], sc));
    o.take(dt(ac[6], -a[6], sc));
    for (std::size_t j : {4, 7}) {
      o.take(nt(a[j], sc));
      o.take(nt(ac[j], sc));
    }
  }
}

void lemma_4_11(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.ff();
    const Curvature4Tensor xs = conjugate(x);
    const double sc = tscale(x);
    o.take(membership(x, g, Space::f).residual);
    o.take(membership(xs, g, Space::f).residual);
    const auto [ric, rs, tau] = trace_data(x, g);
    const auto w = w_components(x, g);
    const auto wc = w_components(xs, g);
    o.take(dt(w[0], (-tau / (n * (n - 1))) * gg, sc));
    o.take(dt(w[0], wc[0], sc));
    o.take(dt(w[1], (1.0 / (n - 1)) * wedge_r((tau / n) * gm - ric, gm, 0.0), sc));
    for (std::size_t j : {2, 3, 7}) {
      o.take(nt(w[j], sc));
      o.take(nt(wc[j], sc));
    }
    o.take(dt(w[4], (1.0 / ((n - 1) * (n - 2))) * (tau * gg - (1.0 / n) * wedge_r(ric + (n - 1) * rs, gm, n - 1)), sc));
    o.take(dt(w[5], psi(x) + (1.0 / (2 * (n - 2))) * wedge_r(ric + rs, gm, 1.0) - (tau / ((n - 1) * (n - 2))) * gg, sc));
    o.take(dt(w[5], wc[5], sc));
    o.take(dt(w[6], mu(x) + (1.0 / (2 * n)) * wedge_r(ric - rs, gm, -1.0), sc));
    o.take(dt(w[6], -wc[6], sc));
  }
}

void lemma_4_9(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  Equivalence eq;
  for (int s = 0; s < cfg.samples; ++s) {
    for (const auto& x : {gen.a_plus_s(), gen.ff()}) {
      const Curvature4Tensor xs = conjugate(x);
      const double fs = fscale(x, g);
      const auto [ric, rs, tau] = trace_data(x, g);
      o.take(nt(w_components(x, g)[7], tscale(x)));
      o.take(nt(w_components(xs, g)[7], tscale(x)));
      o.take(nf(antisym_part(ric) + antisym_part(rs), fs));
      eq.add({nf(antisym_part(ric), fs), nf(antisym_part(rs), fs)});
    }
  }
  eq.finish(o, "Ric symmetric <=> Ric* symmetric");
}

void thm_4_10(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.ff();
    const auto w = w_components(x, g);
    const double sc = tscale(x);
    o.take(dt(x, w[0] + (w[1] + w[4]) + (w[5] + w[6]), sc));
    for (std::size_t j : {2, 3, 7}) o.take(nt(w[j], sc));
    const Curvature4Tensor y = gen.a_plus_s();
    o.take(nt(w_components(y, g)[7], tscale(y)));
  }
}

void lemma_5_3(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.complement();
    const auto [ric, rs, tau] = trace_data(x, g);
    const double fs = fscale(x, g);
    o.require(nf(ric, fs) > kVanish, "sample has vanishing Ric");
    o.take(nf(sym_part(ric), fs));
    o.take(df(rs, 3.0 * ric, fs));
  }
}

void obs_9_21(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.ff();
    const Curvature4Tensor xs = conjugate(x);
    const double sc = tscale(x);
    const auto [ric, rs, tau] = trace_data(x, g);
    const auto w = w_components(x, g);
    const auto wc = w_components(xs, g);
    const auto a = a_components(x, g);
    const auto ac = a_components(xs, g);
    for (const auto* c : {&a, &ac}) {
      Curvature4Tensor sum = (*c)[0] + (*c)[1] + (*c)[2] + (*c)[5] + (*c)[6];
      o.take(dt(sum, c == &a ? x : xs, sc));
      const Curvature4Tensor mid = (*c)[1] + (*c)[2];
      const Curvature4Tensor weyl = (*c)[5] + (*c)[6];
      o.take(std::abs(trace_g(ricci(mid, g), g)) / sscale(x, g));
      o.take(std::abs(trace_g(ricci_star(mid, g), g)) / sscale(x, g));
      o.take(nf(ricci(weyl, g), fscale(x, g)));
      o.take(nf(ricci_star(weyl, g), fscale(x, g)));
    }
    o.take(dt(wc[0], w[0], sc));
    o.take(dt(w[0], a[0], sc));
    o.take(dt(ac[0], a[0], sc));
    o.take(dt(w[5], wc[5], sc));
    o.take(dt(w[1] + w[4], a[1] + a[2], sc));
    const Curvature4Tensor closed =
        (1.0 / (n * (n - 2))) * (2.0 * tau * gg - wedge_r(gm, ric, n - 1) - wedge_r(rs, gm, n - 1));
    o.take(dt(w[1] + w[4], closed, sc));
    o.take(dt(a[4], ac[4], sc));
  }
}

void obs_6_2(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const double sc = tscale(r);
    const auto w = w_components(r, g);
    const Curvature4Tensor x = r - w[2];
    o.take(membership(x, g, Space::f).residual);
    o.take(nt(w_components(x, g)[2], sc));
    const Curvature4Tensor y = r - w[3];
    const auto wy = w_components(y, g);
    const auto ay = a_components(y, g);
    o.take(dt(y - wy[2], y - ay[3] - ay[4], sc));
    const Curvature4Tensor proj = r - w[0] - w[1] - w[2];
    o.take(dt(proj, w[3] + w[4] + w[5] + w[6] + w[7], sc));
    o.take(nf(ricci(proj, g), fscale(r, g)));
    const Curvature4Tensor alg = gen.alg();
    const auto aa = a_components(alg, g);
    for (std::size_t j : {2, 3, 4, 6, 7}) o.take(nt(aa[j], tscale(alg)));
    const auto ar = a_components(r, g);
    o.take(dt(ar[5] + ar[6] + ar[7], w[5] + w[6] + w[7], sc));
  }
}

// --- projective / equiaffine ----------------------------------------------

void thm_9_10(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  Equivalence eq;
  for (int s = 0; s < cfg.samples; ++s) {
    const auto w = w_components(gen.r(), g);
    for (const auto& x : {w[0], w[0] + w[1]}) {
      const auto [ric, rs, tau] = trace_data(x, g);
      const double sc = tscale(x);
      eq.add({nt(w_components(x, g)[1], sc), df(n * ric, tau * gm, fscale(x, g) * n),
              dt(-n * (n - 1) * x, tau * gg, sc * n * n)});
    }
  }
  eq.finish(o, "pi_2 = 0 <=> n Ric = tau g <=> -n(n-1) R = tau g^g");
}

void lemma_4_14_1(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.f();
    o.take(dt(projective_part(x, gen.g(), 1e-8), projective_part_equiaffine(x, gen.g()), tscale(x)));
  }
}

void lemma_4_14_2(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  Equivalence eq;
  for (int s = 0; s < cfg.samples; ++s) {
    for (const auto& x : {gen.ff(), gen.alg()}) {
      const Curvature4Tensor xs = conjugate(x);
      const double sc = tscale(x);
      const auto w = w_components(x, g);
      const Curvature4Tensor p = projective_part(x, g, 1e-8);
      o.take(dt(p, w[4] + w[5] + w[6], sc));
      eq.add({dt(projective_part(xs, g, 1e-8), p, sc), dt(xs, x, sc), membership(x, g, Space::a).residual});
    }
  }
  eq.finish(o, "P(R*) = P(R) <=> R* = R <=> R algebraic");
}

void cor_9_9(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const Matrix gm = gmat(gen);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  o.take(nf(b_forms(gg, g).b_star, fscale(gg, g)));
  o.take(nf(b_forms(gg, g).b, fscale(gg, g)));
  for (int s = 0; s < cfg.samples; ++s) {
    const auto w1 = w_components(gen.r(), g);
    const auto w2 = w_components(gen.r(), g);
    // R* lies in W1 + W2
    const Curvature4Tensor rs = w1[0] + w2[1];
    const Curvature4Tensor x = conjugate(rs);
    o.take(membership(x, g, Space::f).residual);
    o.take(nt(projective_part(rs, g, 1e-8), tscale(x)));
    o.take(nf(b_forms(x, g).b_star, fscale(x, g)));
  }
}

void lemma_8_2(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const auto w = w_components(r, g);
    const Curvature4Tensor pos = r - w[1] - w[2];
    const EinsteinCheck ep = equiaffine_einstein_check(pos, g, 1e-8);
    o.take(std::max({ep.pi2_residual, ep.pi3_residual, ep.direct_residual}));
    o.require(ep.verdict && ep.direct_verdict, "engineered Einstein sample rejected");
    const Curvature4Tensor xi = -wedge_r(gen.traceless_sym(), gmat(gen), 1.0);
    for (const auto& neg : {r, xi, r - w[1], r - w[2]}) {
      const EinsteinCheck en = equiaffine_einstein_check(neg, g, 1e-8);
      o.require(!en.verdict && !en.direct_verdict, "non-Einstein sample accepted");
      o.require(en.verdict == en.direct_verdict, "projector and direct verdicts disagree");
    }
  }
  const EinsteinCheck flat = equiaffine_einstein_check(Curvature4Tensor(gen.n()), g);
  o.require(flat.verdict && flat.direct_verdict, "zero tensor rejected");
}

void eq_4a(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const double sc = tscale(r);
    const auto w = w_components(r, g);
    const Curvature4Tensor ro = traceless_core(r, g, 1e-8);
    o.take(dt(ro, r - w[0] - w[1] - w[2] - w[3] - w[4], sc));
    o.take(nf(ricci(ro, g), fscale(r, g)));
    o.take(nf(ricci_star(ro, g), fscale(r, g)));
    o.take(dt(w[5], psi(ro), sc));
    o.take(dt(w[6], mu(ro), sc));
    o.take(dt(w[7], ro - psi(ro) - mu(ro), sc));
  }
}

void singer_thorpe_check(const Case& c, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const double n = gen.n();
  const Matrix gm = gmat(gen);
  const Curvature4Tensor gg = wedge_r(gm, gm, 0.0);
  const double gg2 = to_vector(gg).squaredNorm();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor x = gen.alg();
    const double sc = tscale(x);
    const auto st = singer_thorpe(x, g, 1e-8);
    const auto& u = st.components[0];
    const auto& z = st.components[1];
    const auto& wy = st.components[2];
    o.take(st.completeness_residual);
    const double cu = to_vector(u).dot(to_vector(gg)) / gg2;
    o.take(dt(u, cu * gg, sc));
    const BilinearForm xi = ricci(z, g) / (n - 2);
    o.take(std::abs(trace_g(xi, g)) / sscale(x, g));
    o.take(nf(antisym_part(xi), fscale(x, g)));
    o.take(dt(z, -wedge_r(xi, gm, 1.0), sc));
    o.take(nf(ricci(wy, g), fscale(x, g)));
    o.take(dt(psi(wy), wy, sc));
    o.take(dt(bianchi_project(wy), wy, sc));
  }
  if (c.n >= 4) {
    for (int s = 0; s < cfg.samples; ++s) {
      const Curvature4Tensor x = psi(w_components(gen.r(), g)[5]);
      o.take(nf(ricci(x, g), fscale(x, g)));
      const auto st = singer_thorpe(x, g, 1e-8);
      o.take(nt(st.components[0], tscale(x)));
      o.take(nt(st.components[1], tscale(x)));
      o.take(dt(st.components[2], x, tscale(x)));
    }
  }
  const double cst = gen.uniform() + 2.0;
  const auto st = singer_thorpe(cst * gg, g);
  o.take(dt(st.components[0], cst * gg, cst));
  o.take(nt(st.components[1], cst));
  o.take(nt(st.components[2], cst));
}

void weyl_empty_n3(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (const char* tag : {"W6", "A6"}) {
    const SpaceTag t = *parse_space_tag(tag);
    const DimensionReport rep = empirical_dimension(t, gen.g(), 0, cfg.seed, false);
    o.require(rep.empirical_dim == 0, std::string(tag) + " has nonzero rank at n = 3");
    bool empty = false;
    try {
      (void)sample(t, gen.g(), cfg.seed);
    } catch (const Error& e) {
      empty = e.code() == ErrorCode::EmptySpace;
    }
    o.require(empty, std::string(tag) + " sample did not signal EmptySpace");
  }
}

// --- algebra plumbing -----------------------------------------------------

void ric_star_conjugation(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor t = antisymmetrize_first_pair(gen.noise());
    o.take(df(ricci_star(t, g), ricci(conjugate(t), g), fscale(t, g)));
    o.take(dt(conjugate(conjugate(t)), t, tscale(t)));
  }
}

void ricci_report(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const RicciReport rep = ricci_traces(r, g);
    const double fs = fscale(r, g);
    o.take(df(rep.rho24, -rep.rho14, fs));
    o.take(df(rep.ric_star, -rep.rho13, fs));
    o.take(std::abs(trace_g(rep.ric, g) - rep.tau) / sscale(r, g));
    o.take(std::abs(trace_g(rep.ric_star, g) - rep.tau) / sscale(r, g));
  }
}

void psi_mu_check(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const double sc = tscale(r);
    const Curvature4Tensor p = psi(r);
    const Curvature4Tensor m = mu(r);
    o.take(dt(psi(p), p, sc));
    o.take(dt(mu(m), m, sc));
    o.take(nt(psi(m), sc));
    o.take(nt(mu(p), sc));
    o.take(membership(p, g, Space::a).residual);
    o.take(membership(m, g, Space::s).residual);
    o.take(dt(conjugate(p), p, sc));
    o.take(dt(conjugate(m), -m, sc));
  }
}

void bianchi_check(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor t = gen.noise();
    const Curvature4Tensor b = bianchi_project(t);
    o.take(membership(b, g, Space::r).residual);
    o.take(dt(bianchi_project(b), b, tscale(b)));
    const Curvature4Tensor symmetric_pair = t + t.permuted({1, 0, 2, 3});
    o.take(nt(bianchi_project(symmetric_pair), tscale(t)));
  }
}

void sigma_check(const Case&, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const BilinearForm om = gen.antiform();
    const BilinearForm th = gen.symform();
    const Curvature4Tensor x = sigma_split(om, th, g);
    o.take(df(ricci(x, g), om + th, std::max(max_abs(om + th), 1.0)));
    o.take(membership(x, g, Space::r).residual);
  }
}

void pairing_check(const Case& c, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor a = gen.noise();
    const Curvature4Tensor b = gen.noise();
    const Curvature4Tensor d = gen.noise();
    const double lam = gen.uniform();
    const double ab = tensor_pairing(a, b, g);
    const double scale = a.frobenius_norm() * b.frobenius_norm();
    o.take(std::abs(ab - tensor_pairing(b, a, g)) / scale);
    o.take(std::abs(tensor_pairing(a + lam * d, b, g) - ab - lam * tensor_pairing(d, b, g)) /
           (scale + d.frobenius_norm() * b.frobenius_norm()));
    if (c.g.signature().second == 0) o.require(tensor_pairing(a, a, g) > 0.0, "pairing not positive");
  }
}

void sampler_membership(const Case& c, Gen&, const SuiteConfig& cfg, Outcome& o) {
  for (const SpaceTag& tag : all_space_tags()) {
    const bool empty = empirical_dimension(tag, c.g, 0, cfg.seed, false).empirical_dim == 0;
    for (int s = 0; s < std::min(cfg.samples, 4); ++s) {
      try {
        const Curvature4Tensor x = sample(tag, c.g, cfg.seed, static_cast<std::uint64_t>(s));
        o.take(membership(x, c.g, tag.predicate()).residual);
        if (tag.kind == SpaceTag::Kind::W || tag.kind == SpaceTag::Kind::A) {
          const auto comps = components(tag.kind == SpaceTag::Kind::W ? Mode::W : Mode::A, x, c.g);
          o.take(dt(comps[static_cast<std::size_t>(tag.index - 1)], x, tscale(x)));
        }
      } catch (const Error& e) {
        o.require(e.code() == ErrorCode::EmptySpace && empty, "sampler for " + tag.name() + " failed: " + e.what());
      }
    }
  }
}

void rescale_invariance(const Case& c, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  for (double factor : {0.5, 3.0}) {
    const ScalarProduct gs = c.g.scaled(factor);
    for (int s = 0; s < cfg.samples; ++s) {
      for (const auto& x : {gen.r(), gen.f(), gen.alg(), gen.sym(), gen.proj(), gen.traceless()}) {
        for (Space sp : {Space::co, Space::r, Space::a, Space::s, Space::f, Space::p, Space::t}) {
          const auto m1 = membership(x, c.g, sp, 1e-8);
          const auto m2 = membership(x, gs, sp, 1e-8);
          o.require(m1.member == m2.member, "membership in " + std::string(to_string(sp)) + " changed under rescale");
        }
        for (Mode mode : {Mode::W, Mode::A}) {
          const auto c1 = components(mode, x, c.g);
          const auto c2 = components(mode, x, gs);
          for (std::size_t j = 0; j < 8; ++j) {
            o.take(dt(c1[j], c2[j], tscale(x)));
            o.require((nt(c1[j], tscale(x)) <= kVanish) == (nt(c2[j], tscale(x)) <= kVanish),
                      "vanishing pattern changed under rescale");
          }
        }
      }
    }
  }
}

void thm_9_16(const Case& c, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  const auto& g = gen.g();
  const Matrix gm = gmat(gen);
  for (int s = 0; s < cfg.samples; ++s) {
    const Curvature4Tensor r = gen.r();
    const BilinearForm pform = gen.form();
    const Curvature4Tensor shifted = r + wedge_r(pform, gm, 0.0) + 2.0 * dot_product(antisym_part(pform), gm);
    const double sc = std::max(tscale(r), tscale(shifted));
    o.take(membership(shifted, g, Space::r).residual);
    o.take(dt(projective_part(shifted, g, 1e-8), projective_part(r, g, 1e-8), sc));
    const auto w1 = w_components(r, g);
    const auto w2 = w_components(shifted, g);
    for (std::size_t j = 3; j < 8; ++j) o.take(dt(w1[j], w2[j], sc));
    const ScalarProduct gs = c.g.scaled(2.0 + gen.uniform());
    const auto ws = w_components(r, gs);
    const auto as = a_components(r, gs);
    o.take(dt(as[5], ws[5], tscale(r)));
    o.take(dt(ws[5], w1[5], tscale(r)));
  }
}

void projection_family(const Case& c, Gen& gen, const SuiteConfig&, Outcome& o) {
  (void)gen;
  for (Mode mode : {Mode::W, Mode::A}) {
    const ProjectionFamily fam(mode, c.g);
    Matrix total = Matrix::Zero(fam.bianchi().rows(), fam.bianchi().cols());
    for (int i = 1; i <= 8; ++i) {
      total += fam.matrix(i);
      for (int j = 1; j <= 8; ++j) {
        const Matrix prod = fam.matrix(i) * fam.matrix(j);
        o.take(i == j ? max_abs(prod - fam.matrix(i)) : max_abs(prod));
      }
    }
    o.take(max_abs(total - fam.bianchi()));
    o.take(max_abs(fam.bianchi() * fam.bianchi() - fam.bianchi()));
  }
}

void dimension_consistency(const Case& c, Gen& gen, const SuiteConfig& cfg, Outcome& o) {
  auto dim_of = [&](const std::string& tag) {
    const DimensionReport rep = empirical_dimension(*parse_space_tag(tag), c.g, 0, cfg.seed, false);
    o.require(rep.conclusive, tag + " rank inconclusive");
    if (rep.formula_dim)
      o.require(*rep.formula_dim == rep.empirical_dim,
                tag + " rank " + std::to_string(rep.empirical_dim) + " vs formula " + std::to_string(*rep.formula_dim));
    return rep.empirical_dim;
  };
  const int r = dim_of("r");
  std::array<int, 9> w{}, a{};
  int sw = 0, sa = 0;
  for (int j = 1; j <= 8; ++j) {
    w[j] = dim_of("W" + std::to_string(j));
    a[j] = dim_of("A" + std::to_string(j));
    sw += w[j];
    sa += a[j];
  }
  for (const char* tag : {"a", "f", "p", "t"}) (void)dim_of(tag);
  o.require(sw == r, "sum of W dimensions differs from dim r");
  o.require(sa == r, "sum of A dimensions differs from dim r");
  o.require(w[2] == w[5] && w[5] == a[2] && a[2] == a[3], "W2/W5/A2/A3 dimensions differ");
  o.require(w[3] == w[4] && w[4] == a[4] && a[4] == a[5], "W3/W4/A4/A5 dimensions differ");

  // rho14 image of generalized curvature tensors
  const int n = c.n;
  const int k = 2 * n * n + 4;
  Matrix full(k, n * n), symm(k, n * n), anti(k, n * n);
  for (int i = 0; i < k; ++i) {
    const BilinearForm ric = ricci(gen.r(), c.g);
    const BilinearForm s = sym_part(ric);
    const BilinearForm l = antisym_part(ric);
    full.row(i) = Eigen::Map<const Eigen::RowVectorXd>(ric.data(), n * n);
    symm.row(i) = Eigen::Map<const Eigen::RowVectorXd>(s.data(), n * n);
    anti.row(i) = Eigen::Map<const Eigen::RowVectorXd>(l.data(), n * n);
  }
  o.require(numerical_rank(full).rank == n * n, "Ric image is not all of V* x V*");
  o.require(numerical_rank(symm).rank == n * (n + 1) / 2, "symmetric Ric image has wrong dimension");
  o.require(numerical_rank(anti).rank == n * (n - 1) / 2, "antisymmetric Ric image has wrong dimension");
}

std::vector<CheckDef> registry() {
  using namespace std::placeholders;
  std::vector<CheckDef> defs;
  auto add = [&](std::string name, bool floating, CheckFn fn) { defs.push_back({std::move(name), floating, std::move(fn)}); };
  add("completeness_w", true, std::bind(completeness, Mode::W, _1, _2, _3, _4));
  add("completeness_a", true, std::bind(completeness, Mode::A, _1, _2, _3, _4));
  add("idempotence_w", true, std::bind(idempotence, Mode::W, _1, _2, _3, _4));
  add("idempotence_a", true, std::bind(idempotence, Mode::A, _1, _2, _3, _4));
  add("orthogonality_w", true, std::bind(orthogonality, Mode::W, _1, _2, _3, _4));
  add("orthogonality_a", true, std::bind(orthogonality, Mode::A, _1, _2, _3, _4));
  add("gram_positivity", true, gram_positivity);
  defs.back().applies = [](const Case& c) { return c.g.signature().second == 0; };
  add("projection_family", true, projection_family);
  add("lemma_6_1_map_identities", true, lemma_6_1);
  add("lemma_4_5", true, lemma_4_5);
  add("lemma_4_6", true, lemma_4_6);
  add("lemma_5_5", true, lemma_5_5);
  add("lemma_5_6", true, lemma_5_6);
  add("lemma_4_7", true, std::bind(vanishing, Mode::W, _1, _2, _3, _4));
  add("lemma_5_7", true, std::bind(vanishing, Mode::A, _1, _2, _3, _4));
  add("lemma_5_7_6", true, lemma_5_7_6);
  add("lemma_2_10", true, lemma_2_10);
  add("remark_4_12", true, remark_4_12);
  add("lemma_5_8", true, lemma_5_8);
  add("lemma_4_11", true, lemma_4_11);
  add("lemma_4_9", true, lemma_4_9);
  add("thm_4_10", true, thm_4_10);
  add("lemma_5_3", true, lemma_5_3);
  add("obs_9_21", true, obs_9_21);
  add("obs_6_2", true, obs_6_2);
  add("thm_9_10", true, thm_9_10);
  add("lemma_4_14_1", true, lemma_4_14_1);
  add("lemma_4_14_2", true, lemma_4_14_2);
  add("cor_9_9", true, cor_9_9);
  add("lemma_8_2", true, lemma_8_2);
  add("eq_4a", true, eq_4a);
  add("singer_thorpe", true, singer_thorpe_check);
  add("weyl_empty_n3", false, weyl_empty_n3);
  defs.back().applies = [](const Case& c) { return c.n == 3; };
  add("ric_star_conjugation", true, ric_star_conjugation);
  add("ricci_report", true, ricci_report);
  add("psi_mu", true, psi_mu_check);
  add("bianchi_project", true, bianchi_check);
  add("sigma_split", true, sigma_check);
  add("tensor_pairing", true, pairing_check);
  add("sampler_membership", true, sampler_membership);
  add("rescale_invariance", true, rescale_invariance);
  add("thm_9_16", true, thm_9_16);
  add("dimension_consistency", false, dimension_consistency);
  return defs;
}

std::vector<Case> build_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  std::set<std::pair<int, int>> used;
  for (int n : cfg.dims) {
    if (n < 3) fail(ErrorCode::DimensionTooSmall, "suite dimension must be at least 3");
    std::vector<std::pair<int, int>> sigs;
    if (cfg.signatures.empty()) {
      sigs = {{n, 0}, {n - 1, 1}};
    } else {
      for (const auto& s : cfg.signatures)
        if (s.first + s.second == n) {
          sigs.push_back(s);
          used.insert(s);
        }
    }
    for (const auto& [p, q] : sigs)
      cases.push_back({n, ScalarProduct::standard(p, q),
                       "n=" + std::to_string(n) + ",sig=(" + std::to_string(p) + "," + std::to_string(q) + ")"});
  }
  for (const auto& s : cfg.signatures)
    if (!used.count(s))
      fail(ErrorCode::InvalidArgument, "signature (" + std::to_string(s.first) + "," + std::to_string(s.second) +
                                           ") matches no requested dimension");
  return cases;
}

} // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.name);
  return out;
}

SuiteReport run_invariant_suite(const SuiteConfig& config) {
  if (config.samples < 1) fail(ErrorCode::InvalidArgument, "samples must be positive");
  const auto defs = registry();
  for (const auto& name : config.only)
    if (std::none_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.name == name; }))
      fail(ErrorCode::InvalidArgument, "unknown check '" + name + "'");
  const std::vector<Case> cases = build_cases(config);

  SuiteReport report;
  report.config = config;
  for (const auto& def : defs) {
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), def.name) == config.only.end())
      continue;
    CheckResult res;
    res.name = def.name;
    res.floating = def.floating;
    Outcome total;
    for (const Case& c : cases) {
      if (!def.applies(c)) continue;
      Outcome o;
      Gen gen(c, config.seed, def.name);
      try {
        def.fn(c, gen, config, o);
      } catch (const std::exception& e) {
        o.failures.push_back(e.what());
      }
      total.take(o.residual);
      for (auto& f : o.failures) total.failures.push_back(c.label + ": " + f);
    }
    res.worst_residual = total.residual;
    res.failures = std::move(total.failures);
    res.pass = res.failures.empty() && (!def.floating || res.worst_residual < config.tol);
    report.checks.push_back(std::move(res));
  }
  return report;
}

nlohmann::json suite_report_to_json(const SuiteReport& report) {
  using nlohmann::json;
  const SuiteConfig& cfg = report.config;
  json config;
  config["dims"] = cfg.dims;
  json sigs = json::array();
  for (const auto& [p, q] : cfg.signatures) sigs.push_back({p, q});
  config["signatures"] = sigs;
  config["samples"] = cfg.samples;
  config["seed"] = cfg.seed;
  config["tol"] = cfg.tol;
  json out = json::object();
  for (const auto& c : report.checks) {
    json entry;
    entry["pass"] = c.pass;
    entry["worst_residual"] = std::isfinite(c.worst_residual) ? json(c.worst_residual) : json(nullptr);
    entry["kind"] = c.floating ? "floating" : "structural";
    entry["config"] = config;
    if (!c.failures.empty()) entry["failures"] = c.failures;
    out[c.name] = entry;
  }
  return out;
}

} // namespace eqcurv
