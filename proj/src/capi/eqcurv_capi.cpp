#include "eqcurv/eqcurv.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "curvature.hpp"
#include "decompose.hpp"
#include "error.hpp"
#include "io.hpp"
#include "sampling.hpp"
#include "verify.hpp"

struct eqc_metric {
  eqcurv::ScalarProduct g;
};

struct eqc_tensor {
  eqcurv::Curvature4Tensor t;
};

struct eqc_decomposition {
  eqcurv::DecompositionResult d;
};

namespace {

using namespace eqcurv;

thread_local std::string last_error;

int status_of(ErrorCode c) { return static_cast<int>(c) + 1; }

int set_error(int status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
int guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return EQC_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(EQC_SCHEMA_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EQC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EQC_INTERNAL_ERROR, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

Matrix read_form(const double* entries, int n) {
  require(entries != nullptr, "null form pointer");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[i * n + j];
  return m;
}

void write_form(const Matrix& m, double* out) {
  const auto n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[i * n + j] = m(i, j);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

eqc_tensor* wrap(Curvature4Tensor t) { return new eqc_tensor{std::move(t)}; }

SpaceTag tag_of(const char* space) {
  require(space != nullptr, "null space tag");
  const auto tag = parse_space_tag(space);
  if (!tag) fail(ErrorCode::UnknownSpace, std::string("unknown space '") + space + "'");
  return *tag;
}

SuiteConfig config_from_json(const json& doc) {
  SuiteConfig cfg;
  if (!doc.is_object()) fail(ErrorCode::SchemaError, "/: expected an object");
  for (const auto& [key, value] : doc.items()) {
    const std::string path = "/" + key;
    if (key == "dims") {
      cfg.dims.clear();
      for (const auto& d : value) cfg.dims.push_back(d.get<int>());
    } else if (key == "signatures") {
      for (const auto& s : value) {
        if (!s.is_array() || s.size() != 2) fail(ErrorCode::SchemaError, path + ": expected [p, q] pairs");
        cfg.signatures.emplace_back(s[0].get<int>(), s[1].get<int>());
      }
    } else if (key == "samples") {
      cfg.samples = value.get<int>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "tol") {
      cfg.tol = value.get<double>();
    } else if (key == "only") {
      for (const auto& s : value) cfg.only.push_back(s.get<std::string>());
    } else {
      fail(ErrorCode::SchemaError, path + ": unknown key");
    }
  }
  return cfg;
}

} // namespace

extern "C" {

const char* eqc_status_string(int status) {
  if (status == EQC_OK) return "ok";
  if (status >= 1 && status <= EQC_INVALID_ARGUMENT) return to_string(static_cast<ErrorCode>(status - 1)).data();
  if (status == EQC_INTERNAL_ERROR) return "InternalError";
  return "UnknownStatus";
}

const char* eqc_last_error_message(void) { return last_error.c_str(); }

const char* eqc_version(void) { return "0.1.0"; }

int eqc_metric_create(int n, const double* entries, eqc_metric** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    if (n < 3) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 3");
    *out = new eqc_metric{ScalarProduct::build(read_form(entries, n))};
  });
}

int eqc_metric_standard(int p, int q, eqc_metric** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(p >= 0 && q >= 0, "signature entries must be nonnegative");
    *out = new eqc_metric{ScalarProduct::standard(p, q)};
  });
}

int eqc_metric_scaled(const eqc_metric* g, double factor, eqc_metric** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new eqc_metric{g->g.scaled(factor)};
  });
}

int eqc_metric_dim(const eqc_metric* g) { return g ? g->g.dim() : 0; }

int eqc_metric_signature(const eqc_metric* g, int* p, int* q) {
  return guarded([&] {
    require(g && p && q, "null argument");
    const auto [pp, qq] = g->g.signature();
    *p = pp;
    *q = qq;
  });
}

int eqc_metric_entries(const eqc_metric* g, double* out, size_t len) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto n = static_cast<size_t>(g->g.dim());
    if (len != n * n)
      fail(ErrorCode::LengthMismatch, "expected " + std::to_string(n * n) + " entries, got " + std::to_string(len));
    write_form(g->g.matrix(), out);
  });
}

void eqc_metric_free(eqc_metric* g) { delete g; }

int eqc_tensor_create(int n, const double* entries, size_t len, eqc_tensor** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    if (n < 1) fail(ErrorCode::DimensionTooSmall, "dimension must be positive");
    require(entries != nullptr || len == 0, "null entries");
    std::vector<double> data(entries, entries + len);
    *out = wrap(Curvature4Tensor(n, std::move(data)));
  });
}

int eqc_tensor_zero(int n, eqc_tensor** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    if (n < 1) fail(ErrorCode::DimensionTooSmall, "dimension must be positive");
    *out = wrap(Curvature4Tensor(n));
  });
}

int eqc_tensor_dim(const eqc_tensor* t) { return t ? t->t.dim() : 0; }

size_t eqc_tensor_size(const eqc_tensor* t) { return t ? t->t.size() : 0; }

int eqc_tensor_entries(const eqc_tensor* t, double* out, size_t len) {
  return guarded([&] {
    require(t && out, "null argument");
    if (len != t->t.size())
      fail(ErrorCode::LengthMismatch,
           "expected " + std::to_string(t->t.size()) + " entries, got " + std::to_string(len));
    const auto e = t->t.entries();
    std::copy(e.begin(), e.end(), out);
  });
}

void eqc_tensor_free(eqc_tensor* t) { delete t; }

int eqc_wedge(const double* h, const double* k, int n, double r, eqc_tensor** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n >= 1, "dimension must be positive");
    *out = wrap(wedge_r(read_form(h, n), read_form(k, n), r));
  });
}

int eqc_dot(const double* h, const double* k, int n, eqc_tensor** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n >= 1, "dimension must be positive");
    *out = wrap(dot_product(read_form(h, n), read_form(k, n)));
  });
}

int eqc_conjugate(const eqc_tensor* t, eqc_tensor** out) {
  return guarded([&] {
    require(t && out, "null argument");
    *out = wrap(conjugate(t->t));
  });
}

int eqc_bianchi_project(const eqc_tensor* t, eqc_tensor** out) {
  return guarded([&] {
    require(t && out, "null argument");
    *out = wrap(bianchi_project(t->t));
  });
}

int eqc_psi_mu(const eqc_tensor* t, eqc_tensor** psi_out, eqc_tensor** mu_out) {
  return guarded([&] {
    require(t && psi_out && mu_out, "null argument");
    auto [p, m] = psi_mu(t->t);
    std::unique_ptr<eqc_tensor> pp(wrap(std::move(p)));
    *mu_out = wrap(std::move(m));
    *psi_out = pp.release();
  });
}

int eqc_membership(const eqc_tensor* t, const eqc_metric* g, eqc_space space, double tol, int* member,
                   double* residual) {
  return guarded([&] {
    require(t && g && member, "null argument");
    if (space < EQC_SPACE_CO || space > EQC_SPACE_T) fail(ErrorCode::UnknownSpace, "unknown space");
    const auto m = membership(t->t, g->g, static_cast<Space>(space), tol);
    *member = m.member ? 1 : 0;
    if (residual) *residual = m.residual;
  });
}

int eqc_ricci(const eqc_tensor* t, const eqc_metric* g, double* ric, double* ric_star, double* tau) {
  return guarded([&] {
    require(t && g, "null argument");
    require_same_dim(t->t.dim(), g->g.dim(), "ricci");
    const RicciReport rep = ricci_traces(t->t, g->g);
    if (ric) write_form(rep.ric, ric);
    if (ric_star) write_form(rep.ric_star, ric_star);
    if (tau) *tau = rep.tau;
  });
}

int eqc_pairing(const eqc_tensor* a, const eqc_tensor* b, const eqc_metric* g, double* out) {
  return guarded([&] {
    require(a && b && g && out, "null argument");
    *out = tensor_pairing(a->t, b->t, g->g);
  });
}

int eqc_decompose(eqc_mode mode, const eqc_tensor* r, const eqc_metric* g, double tol, eqc_decomposition** out) {
  return guarded([&] {
    require(r && g && out, "null argument");
    if (mode < EQC_MODE_W || mode > EQC_MODE_ST) fail(ErrorCode::InvalidArgument, "unknown mode");
    *out = new eqc_decomposition{decompose(static_cast<Mode>(mode), r->t, g->g, tol)};
  });
}

int eqc_decomposition_count(const eqc_decomposition* d) { return d ? static_cast<int>(d->d.components.size()) : 0; }

int eqc_decomposition_component(const eqc_decomposition* d, int index, eqc_tensor** out) {
  return guarded([&] {
    require(d && out, "null argument");
    if (index < 0 || index >= static_cast<int>(d->d.components.size()))
      fail(ErrorCode::InvalidArgument, "component index out of range");
    *out = wrap(d->d.components[static_cast<size_t>(index)]);
  });
}

double eqc_decomposition_completeness(const eqc_decomposition* d) { return d ? d->d.completeness_residual : NAN; }

double eqc_decomposition_orthogonality(const eqc_decomposition* d) { return d ? d->d.orthogonality_residual : NAN; }

void eqc_decomposition_free(eqc_decomposition* d) { delete d; }

int eqc_projective_part(const eqc_tensor* r, const eqc_metric* g, double tol, eqc_tensor** out) {
  return guarded([&] {
    require(r && g && out, "null argument");
    *out = wrap(projective_part(r->t, g->g, tol));
  });
}

int eqc_sigma_split(const double* omega, const double* theta, const eqc_metric* g, eqc_tensor** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const int n = g->g.dim();
    *out = wrap(sigma_split(read_form(omega, n), read_form(theta, n), g->g));
  });
}

int eqc_einstein_check(const eqc_tensor* r, const eqc_metric* g, double tol, int* verdict, int* direct_verdict) {
  return guarded([&] {
    require(r && g && verdict, "null argument");
    const EinsteinCheck c = equiaffine_einstein_check(r->t, g->g, tol);
    *verdict = c.verdict ? 1 : 0;
    if (direct_verdict) *direct_verdict = c.direct_verdict ? 1 : 0;
  });
}

int eqc_sample(const char* space, const eqc_metric* g, uint64_t seed, uint64_t index, eqc_tensor** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = wrap(sample(tag_of(space), g->g, seed, index));
  });
}

int eqc_empirical_dimension(const char* space, const eqc_metric* g, int samples, uint64_t seed, int* dim,
                            int* formula_dim, int* conclusive) {
  return guarded([&] {
    require(g && dim, "null argument");
    require(samples >= 0, "samples must be nonnegative");
    const DimensionReport rep = empirical_dimension(tag_of(space), g->g, samples, seed, false);
    *dim = rep.empirical_dim;
    if (formula_dim) *formula_dim = rep.formula_dim ? *rep.formula_dim : -1;
    if (conclusive) *conclusive = rep.conclusive ? 1 : 0;
  });
}

int eqc_decompose_json(const char* mode, const char* tensor_json, char** out) {
  return guarded([&] {
    require(mode && tensor_json && out, "null argument");
    const auto m = parse_mode(mode);
    if (!m) fail(ErrorCode::InvalidArgument, std::string("unknown mode '") + mode + "'");
    const TensorDocument doc = parse_tensor(tensor_json);
    *out = dup_string(to_text(decomposition_to_json(decompose(*m, doc.R, doc.g), doc.g)));
  });
}

int eqc_sample_json(const char* space, int p, int q, uint64_t seed, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    SampleSpec spec;
    spec.space = tag_of(space);
    spec.dim = p + q;
    spec.p = p;
    spec.q = q;
    spec.seed = seed;
    require(p >= 0 && q >= 0, "signature entries must be nonnegative");
    const Curvature4Tensor t = sample(spec);
    *out = dup_string(to_text(tensor_to_json(t, ScalarProduct::standard(p, q))));
  });
}

int eqc_dims_json(int p, int q, int samples, uint64_t seed, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(p >= 0 && q >= 0, "signature entries must be nonnegative");
    require(samples >= 0, "samples must be nonnegative");
    const ScalarProduct g = ScalarProduct::standard(p, q);
    json doc;
    doc["dim"] = p + q;
    doc["signature"] = {p, q};
    json spaces = json::object();
    for (const SpaceTag& tag : all_space_tags())
      spaces[tag.name()] = dimension_report_to_json(empirical_dimension(tag, g, samples, seed, true));
    doc["spaces"] = spaces;
    *out = dup_string(to_text(doc));
  });
}

int eqc_verify_json(const char* config_json, char** out, int* all_passed) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    SuiteConfig cfg;
    if (config_json && *config_json) cfg = config_from_json(json::parse(config_json));
    const SuiteReport rep = run_invariant_suite(cfg);
    if (all_passed) *all_passed = rep.all_passed() ? 1 : 0;
    *out = dup_string(to_text(suite_report_to_json(rep)));
  });
}

int eqc_chart_json(const char* chart_json, const double* point, size_t len, const char* report, char** out) {
  return guarded([&] {
    require(chart_json && out, "null argument");
    require(point != nullptr || len == 0, "null point");
    const std::string kind = report ? report : "curvature";
    if (kind != "curvature" && kind != "triple")
      fail(ErrorCode::InvalidArgument, "report must be 'curvature' or 'triple'");
    const PolyChart chart = parse_chart(chart_json);
    if (len != static_cast<size_t>(chart.dim()))
      fail(ErrorCode::LengthMismatch,
           "point: expected " + std::to_string(chart.dim()) + " coordinates, got " + std::to_string(len));
    const std::span<const double> x(point, len);
    for (double v : x)
      if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "point coordinates must be finite");
    const TripleReport rep = conjugate_triple_report(chart, x);
    json doc;
    if (kind == "triple") {
      doc = triple_report_to_json(rep);
    } else {
      const PointGeometry geo = evaluate_geometry(chart, x);
      const ScalarProduct g = ScalarProduct::build(geo.g);
      doc["point"] = std::vector<double>(x.begin(), x.end());
      doc["g"] = form_to_json(geo.g);
      doc["R"] = tensor_to_json(rep.R, g);
      doc["R_star"] = tensor_to_json(rep.R_star, g);
      doc["R_g"] = tensor_to_json(rep.R_g, g);
    }
    *out = dup_string(to_text(doc));
  });
}

void eqc_free_string(char* s) { std::free(s); }

} // extern "C"
