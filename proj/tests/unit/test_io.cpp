#include <doctest.h>

#include <cstring>
#include <functional>
#include <limits>
#include <string>

#include "error.hpp"
#include "io.hpp"
#include "../support/generators.hpp"

using namespace eqcurv;

namespace {

std::string zeros_doc(int n, int count, const std::string& extra = "") {
  std::string r = "[";
  for (int i = 0; i < count; ++i) r += (i ? ",0" : "0");
  r += "]";
  return "{\"dim\":" + std::to_string(n) + ",\"signature\":[" + std::to_string(n) + ",0]" + extra + ",\"R\":" + r +
         "}";
}

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorCode::InvalidArgument, "");
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("minimal tensor document") {
  const TensorDocument doc = parse_tensor(zeros_doc(3, 81));
  CHECK(doc.R.dim() == 3);
  CHECK(doc.R.max_norm() == 0.0);
  CHECK(doc.g.signature() == std::pair{3, 0});
  CHECK(doc.g.matrix().isIdentity(0.0));
}

TEST_CASE("signature without g gives the standard form") {
  std::string r = "[";
  for (int i = 0; i < 81; ++i) r += (i ? ",0" : "0");
  r += "]";
  const TensorDocument doc = parse_tensor("{\"dim\":3,\"signature\":[2,1],\"R\":" + r + "}");
  CHECK(doc.g.matrix()(0, 0) == 1.0);
  CHECK(doc.g.matrix()(1, 1) == 1.0);
  CHECK(doc.g.matrix()(2, 2) == -1.0);
  CHECK(doc.g.signature() == std::pair{2, 1});
}

TEST_CASE("length mismatch") {
  const Error e = error_of([] { (void)parse_tensor(zeros_doc(3, 80)); });
  CHECK(e.code() == ErrorCode::LengthMismatch);
  CHECK(std::string(e.what()).find("expected 81") != std::string::npos);
}

TEST_CASE("schema errors carry a JSON path") {
  auto path_of = [](const std::string& text) {
    const Error e = error_of([&] { (void)parse_tensor(text); });
    CHECK(e.code() == ErrorCode::SchemaError);
    return std::string(e.what());
  };
  CHECK(path_of("{\"signature\":[3,0],\"R\":[]}").rfind("/dim", 0) == 0);
  CHECK(path_of("{\"dim\":\"three\",\"signature\":[3,0],\"R\":[]}").rfind("/dim", 0) == 0);
  CHECK(path_of("{\"dim\":3,\"signature\":[3,0]}").rfind("/R", 0) == 0);
  CHECK(path_of("{\"dim\":3,\"R\":[]}").rfind("/signature", 0) == 0);
  CHECK(path_of("[1,2]").rfind("/", 0) == 0);
  CHECK(error_of([] { (void)parse_tensor("{not json"); }).code() == ErrorCode::SchemaError);
  std::string bad = zeros_doc(3, 81);
  bad.replace(bad.find("[0,"), 3, "[\"x\",");
  CHECK(path_of(bad).rfind("/R/0", 0) == 0);
}

TEST_CASE("dimension and metric errors") {
  CHECK(error_of([] { (void)parse_tensor(zeros_doc(2, 16)); }).code() == ErrorCode::DimensionTooSmall);
  const std::string singular = zeros_doc(3, 81, ",\"g\":[[1,0,0],[0,1,0],[0,0,0]]");
  CHECK(error_of([&] { (void)parse_tensor(singular); }).code() == ErrorCode::DegenerateMetric);
  const std::string asym = zeros_doc(3, 81, ",\"g\":[[1,0.5,0],[0,1,0],[0,0,1]]");
  CHECK(error_of([&] { (void)parse_tensor(asym); }).code() == ErrorCode::NotSymmetric);
  const std::string wrong_sig = zeros_doc(3, 81, ",\"g\":[[1,0,0],[0,1,0],[0,0,-1]]");
  CHECK(error_of([&] { (void)parse_tensor(wrong_sig); }).code() == ErrorCode::SchemaError);
}

TEST_CASE("round trip is bit exact") {
  gen::for_all(20, 70, [](gen::Source& src, int) {
    const auto [p, q] = src.signature(5);
    const ScalarProduct sp = src.integer(0, 1) ? src.metric(p, q) : ScalarProduct::standard(p, q);
    const Curvature4Tensor r = src.tensor(p + q);
    const std::string text = to_text(tensor_to_json(r, sp));
    const TensorDocument back = parse_tensor(text);
    CHECK(back.R == r);
    CHECK(back.g.matrix() == sp.matrix());
    CHECK(to_text(tensor_to_json(back.R, back.g)) == text);
  });
}

TEST_CASE("standard metric is not written") {
  const ScalarProduct g = ScalarProduct::standard(2, 1);
  const json doc = tensor_to_json(Curvature4Tensor(3), g);
  CHECK_FALSE(doc.contains("g"));
  CHECK(doc["signature"] == json::array({2, 1}));
  CHECK(doc["R"].size() == 81);
  const json scaled = tensor_to_json(Curvature4Tensor(3), ScalarProduct::build(2.0 * g.matrix()));
  CHECK(scaled.contains("g"));
}

TEST_CASE("text output ends with a newline and uses shortest doubles") {
  const std::string s = to_text(json{{"x", 0.1}});
  CHECK(s.back() == '\n');
  CHECK(s.find("0.1") != std::string::npos);
  CHECK(s.find("0.10000") == std::string::npos);
}

TEST_CASE("dimension report JSON") {
  DimensionReport rep;
  rep.space = *parse_space_tag("W6");
  rep.empirical_dim = 0;
  rep.formula_dim = 0;
  rep.samples_used = 4;
  rep.singular_value_gap = std::numeric_limits<double>::infinity();
  rep.conclusive = true;
  const json doc = dimension_report_to_json(rep);
  CHECK(doc["space"] == "W6");
  CHECK(doc["matches_formula"] == true);
  CHECK(doc["singular_value_gap"].is_null());
  rep.formula_dim.reset();
  CHECK(dimension_report_to_json(rep)["formula_dim"].is_null());
  CHECK(dimension_report_to_json(rep)["matches_formula"].is_null());
}

TEST_CASE("chart documents") {
  const std::string text = R"({"dim":3,
    "metric":{"0,0":{"0 0 0":1,"2 0 0":0.5},"1,1":{"0 0 0":1},"2,2":{"0 0 0":-1},"0,2":{"0 1 0":0.1}},
    "cubic":{"0,1,2":{"0 0 1":2}},
    "domain_note":"near the origin"})";
  const PolyChart chart = parse_chart(text);
  CHECK(chart.dim() == 3);
  const std::vector<double> x{2.0, 3.0, 5.0};
  CHECK(chart.metric(0, 0).evaluate(x) == doctest::Approx(3.0));
  CHECK(chart.metric(2, 0).evaluate(x) == doctest::Approx(0.3));
  CHECK(chart.cubic(2, 1, 0).evaluate(x) == doctest::Approx(10.0));
  CHECK(chart.domain_note == "near the origin");
  const std::string again = to_text(chart_to_json(chart));
  CHECK(to_text(chart_to_json(parse_chart(again))) == again);

  auto code = [](const std::string& t) { return error_of([&] { (void)parse_chart(t); }).code(); };
  CHECK(code(R"({"dim":3,"metric":{"1,0":{"0 0 0":1}}})") == ErrorCode::SchemaError);
  CHECK(code(R"({"dim":3,"metric":{"0,3":{"0 0 0":1}}})") == ErrorCode::SchemaError);
  CHECK(code(R"({"dim":3,"metric":{"0,0":{"0 0":1}}})") == ErrorCode::SchemaError);
  CHECK(code(R"({"dim":3,"metric":{"0,0":{"0 0 0":"a"}}})") == ErrorCode::SchemaError);
  CHECK(code(R"({"dim":3,"metric":{},"cubic":{"2,1,0":{"0 0 0":1}}})") == ErrorCode::SchemaError);
  CHECK(code(R"({"dim":2,"metric":{}})") == ErrorCode::DimensionTooSmall);
  CHECK(code(R"({"metric":{}})") == ErrorCode::SchemaError);
}

TEST_CASE("random charts survive a round trip") {
  for (std::uint64_t idx = 0; idx < 5; ++idx) {
    const PolyChart chart = random_poly_chart(2, 1, 3, idx);
    const PolyChart back = chart_from_json(chart_to_json(chart));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(back.metric(i, j) == chart.metric(i, j));
        for (int k = 0; k < 3; ++k) CHECK(back.cubic(i, j, k) == chart.cubic(i, j, k));
      }
  }
}

TEST_CASE("triple report JSON") {
  const PolyChart chart = random_poly_chart(3, 0, 1, 0);
  const std::vector<double> x{0.1, 0.0, -0.1};
  const json doc = triple_report_to_json(conjugate_triple_report(chart, x));
  CHECK(doc["R"].size() == 81);
  CHECK(doc["R_star"].size() == 81);
  CHECK(doc["R_g"].size() == 81);
  CHECK(doc["identity_residuals"].contains("remark_7_7"));
  CHECK(doc["point"] == json::array({0.1, 0.0, -0.1}));
}

} // TEST_SUITE
