#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chart.hpp"
#include "decompose.hpp"
#include "sampling.hpp"

namespace eqcurv {

using json = nlohmann::json;

struct TensorDocument {
  Curvature4Tensor R;
  ScalarProduct g;
};

/// {"dim": n, "signature": [p, q], "g": optional n x n, "R": n^4 numbers}.
/// Throws SchemaError (message starts with the JSON path), LengthMismatch or
/// the scalar product errors.
TensorDocument parse_tensor(std::string_view text);
TensorDocument tensor_from_json(const json& doc);
/// g is written only when it differs from the standard diagonal form.
json tensor_to_json(const Curvature4Tensor& r, const ScalarProduct& g);

json form_to_json(const BilinearForm& b);
json decomposition_to_json(const DecompositionResult& d, const ScalarProduct& g);
json dimension_report_to_json(const DimensionReport& rep);

/// {"dim": n, "metric": {"i,j": {"e1 ... en": c}}, "cubic": {"i,j,k": {...}},
/// "domain_note": optional}. Indices are 0-based and sorted ascending.
PolyChart parse_chart(std::string_view text);
PolyChart chart_from_json(const json& doc);
json chart_to_json(const PolyChart& chart);
json triple_report_to_json(const TripleReport& rep);

/// dump with two-space indent; numbers use the shortest round-trip form.
std::string to_text(const json& doc);

} // namespace eqcurv
