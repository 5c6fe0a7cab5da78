#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace eqcurv {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorCode::SchemaError, path + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema("/", std::string("malformed JSON: ") + e.what());
  }
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) schema(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) schema(path, "expected a finite number");
  return d;
}

int integer_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema(path, "expected an integer");
  return v.get<int>();
}

const json& field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) schema(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) schema(path + "/" + key, "missing required field");
  return *it;
}

Matrix matrix_at(const json& v, int n, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) schema(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    const std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      schema(rp, "expected " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) m(i, j) = number_at(row[static_cast<std::size_t>(j)], rp + "/" + std::to_string(j));
  }
  return m;
}

std::vector<int> index_key(const std::string& key, int arity, int n, const std::string& path) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      schema(path, "index key must be comma-separated integers");
    }
  }
  if (static_cast<int>(out.size()) != arity) schema(path, "expected " + std::to_string(arity) + " indices");
  for (int v : out)
    if (v < 0 || v >= n) schema(path, "index out of range");
  if (!std::is_sorted(out.begin(), out.end())) schema(path, "indices must be sorted ascending");
  return out;
}

Polynomial polynomial_at(const json& v, int n, const std::string& path) {
  if (!v.is_object()) schema(path, "expected an object of monomials");
  Polynomial p(n);
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string mp = path + "/" + it.key();
    std::stringstream ss(it.key());
    Polynomial::Exponents e;
    std::string tok;
    while (ss >> tok) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(tok, &used);
        if (used != tok.size() || k < 0) throw std::invalid_argument(tok);
        e.push_back(k);
      } catch (const std::exception&) {
        schema(mp, "exponent key must be space-separated nonnegative integers");
      }
    }
    if (static_cast<int>(e.size()) != n) schema(mp, "expected " + std::to_string(n) + " exponents");
    p.add_term(e, number_at(it.value(), mp));
  }
  return p;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? " " : "") + std::to_string(e[i]);
    out[key] = c;
  }
  return out;
}

json array3_to_json(const Array3& a) {
  const int n = a.dim();
  json out = json::array();
  for (int i = 0; i < n; ++i) {
    json mi = json::array();
    for (int j = 0; j < n; ++j) {
      json row = json::array();
      for (int k = 0; k < n; ++k) row.push_back(a(i, j, k));
      mi.push_back(row);
    }
    out.push_back(mi);
  }
  return out;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

TensorDocument tensor_from_json(const json& doc) {
  if (!doc.is_object()) schema("/", "expected an object");
  const int n = integer_at(field(doc, "dim", ""), "/dim");
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "/dim: dimension must be at least 3");

  std::optional<std::pair<int, int>> sig;
  if (auto it = doc.find("signature"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2) schema("/signature", "expected [p, q]");
    sig = std::pair{integer_at((*it)[0], "/signature/0"), integer_at((*it)[1], "/signature/1")};
    if (sig->first < 0 || sig->second < 0 || sig->first + sig->second != n)
      schema("/signature", "p + q must equal dim");
  }

  std::optional<ScalarProduct> g;
  if (auto it = doc.find("g"); it != doc.end() && !it->is_null()) {
    g = ScalarProduct::build(matrix_at(*it, n, "/g"));
    if (sig && g->signature() != *sig) schema("/g", "signature of g does not match /signature");
  } else {
    if (!sig) schema("/signature", "missing required field (needed when g is absent)");
    g = ScalarProduct::standard(sig->first, sig->second);
  }

  const json& r = field(doc, "R", "");
  if (!r.is_array()) schema("/R", "expected an array");
  const std::size_t expected = static_cast<std::size_t>(n) * n * n * n;
  if (r.size() != expected)
    fail(ErrorCode::LengthMismatch, "/R: expected " + std::to_string(expected) + " entries, got " +
                                        std::to_string(r.size()));
  std::vector<double> entries(expected);
  for (std::size_t i = 0; i < expected; ++i) entries[i] = number_at(r[i], "/R/" + std::to_string(i));
  return {Curvature4Tensor(n, std::move(entries)), std::move(*g)};
}

TensorDocument parse_tensor(std::string_view text) { return tensor_from_json(parse_text(text)); }

json tensor_to_json(const Curvature4Tensor& r, const ScalarProduct& g) {
  const auto [p, q] = g.signature();
  json out;
  out["dim"] = r.dim();
  out["signature"] = {p, q};
  if (g.matrix() != ScalarProduct::standard(p, q).matrix()) out["g"] = form_to_json(g.matrix());
  const auto e = r.entries();
  out["R"] = std::vector<double>(e.begin(), e.end());
  return out;
}

json form_to_json(const BilinearForm& b) {
  json out = json::array();
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
    out.push_back(row);
  }
  return out;
}

json decomposition_to_json(const DecompositionResult& d, const ScalarProduct& g) {
  json out;
  out["mode"] = std::string(to_string(d.mode));
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(tensor_to_json(c, g));
  out["components"] = comps;
  out["completeness_residual"] = d.completeness_residual;
  out["orthogonality_matrix"] = form_to_json(d.orthogonality_matrix);
  out["orthogonality_residual"] = d.orthogonality_residual;
  return out;
}

json dimension_report_to_json(const DimensionReport& rep) {
  json out;
  out["space"] = rep.space.name();
  out["empirical_dim"] = rep.empirical_dim;
  out["formula_dim"] = rep.formula_dim ? json(*rep.formula_dim) : json(nullptr);
  out["matches_formula"] = rep.formula_dim ? json(*rep.formula_dim == rep.empirical_dim) : json(nullptr);
  out["samples_used"] = rep.samples_used;
  out["singular_value_gap"] = finite_or_null(rep.singular_value_gap);
  out["conclusive"] = rep.conclusive;
  return out;
}

PolyChart chart_from_json(const json& doc) {
  if (!doc.is_object()) schema("/", "expected an object");
  const int n = integer_at(field(doc, "dim", ""), "/dim");
  if (n < 3) fail(ErrorCode::DimensionTooSmall, "/dim: dimension must be at least 3");
  PolyChart chart(n);
  const json& metric = field(doc, "metric", "");
  if (!metric.is_object()) schema("/metric", "expected an object");
  for (auto it = metric.begin(); it != metric.end(); ++it) {
    const std::string path = "/metric/" + it.key();
    const auto idx = index_key(it.key(), 2, n, path);
    chart.set_metric(idx[0], idx[1], polynomial_at(it.value(), n, path));
  }
  if (auto it = doc.find("cubic"); it != doc.end()) {
    if (!it->is_object()) schema("/cubic", "expected an object");
    for (auto c = it->begin(); c != it->end(); ++c) {
      const std::string path = "/cubic/" + c.key();
      const auto idx = index_key(c.key(), 3, n, path);
      chart.set_cubic(idx[0], idx[1], idx[2], polynomial_at(c.value(), n, path));
    }
  }
  if (auto it = doc.find("domain_note"); it != doc.end()) {
    if (!it->is_string()) schema("/domain_note", "expected a string");
    chart.domain_note = it->get<std::string>();
  }
  return chart;
}

PolyChart parse_chart(std::string_view text) { return chart_from_json(parse_text(text)); }

json chart_to_json(const PolyChart& chart) {
  const int n = chart.dim();
  json out;
  out["dim"] = n;
  json metric = json::object();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!chart.metric(i, j).is_zero())
        metric[std::to_string(i) + "," + std::to_string(j)] = polynomial_to_json(chart.metric(i, j));
  out["metric"] = metric;
  json cubic = json::object();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (!chart.cubic(i, j, k).is_zero())
          cubic[std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k)] =
              polynomial_to_json(chart.cubic(i, j, k));
  out["cubic"] = cubic;
  if (!chart.domain_note.empty()) out["domain_note"] = chart.domain_note;
  return out;
}

json triple_report_to_json(const TripleReport& rep) {
  auto flat = [](const Curvature4Tensor& t) {
    const auto e = t.entries();
    return std::vector<double>(e.begin(), e.end());
  };
  json out;
  out["point"] = rep.point;
  out["dim"] = rep.R.dim();
  out["R"] = flat(rep.R);
  out["R_star"] = flat(rep.R_star);
  out["R_g"] = flat(rep.R_g);
  out["C_op"] = array3_to_json(rep.c_op);
  out["tchebychev_form"] = std::vector<double>(rep.tchebychev_form.data(),
                                               rep.tchebychev_form.data() + rep.tchebychev_form.size());
  out["tchebychev_vector"] = std::vector<double>(rep.tchebychev_vector.data(),
                                                 rep.tchebychev_vector.data() + rep.tchebychev_vector.size());
  out["c_tilde"] = array3_to_json(rep.c_tilde);
  out["pick_invariant"] = rep.pick_invariant;
  out["tau"] = rep.tau;
  out["kappa"] = rep.kappa;
  out["norm_c_sq"] = rep.norm_c_sq;
  out["norm_t_sq"] = rep.norm_t_sq;
  json res = json::object();
  for (const auto& [k, v] : rep.identity_residuals) res[k] = finite_or_null(v);
  out["identity_residuals"] = res;
  return out;
}

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace eqcurv
