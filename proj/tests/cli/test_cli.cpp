#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(EQCURV_TEST_DATA) + "/" + name; }

Run run(const std::string& args) {
  const std::string cmd = std::string(EQCURV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("decompose --input " + data("gwedgeg_n3.json")).code == 2);
  CHECK(run("decompose --mode q --input " + data("gwedgeg_n3.json")).code == 2);
  CHECK(run("verify --suite no_such_check --dim 3").code == 2);
  CHECK(run("sample --space nope").code == 2);
  CHECK(run("verify --samples 0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("data errors exit with 1") {
  CHECK(run("decompose --mode w --input " + data("short_n3.json")).code == 1);
  CHECK(run("decompose --mode w --input /nonexistent/file.json").code == 1);
  CHECK(run("sample --space W6 --dim 3").code == 1);
  CHECK(run("chart --input " + data("flat_cubic_n3.json") + " --point 0,0").code == 1);
}

TEST_CASE("decompose g wedge g") {
  const Run r = run("decompose --mode w --input " + data("gwedgeg_n3.json"));
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["mode"] == "w");
  REQUIRE(doc["components"].size() == 8);
  CHECK(doc["completeness_residual"].get<double>() <= 1e-12);
  std::ifstream in(data("gwedgeg_n3.json"));
  const json input = json::parse(in);
  // g wedge g lies entirely in the first summand
  const json first = doc["components"][0]["R"];
  for (size_t i = 0; i < 81; ++i) CHECK(first[i].get<double>() == doctest::Approx(input["R"][i].get<double>()));
  for (size_t c = 1; c < 8; ++c)
    for (const auto& v : doc["components"][c]["R"]) CHECK(std::abs(v.get<double>()) <= 1e-12);

  const auto out = std::filesystem::temp_directory_path() / "eqcurv_cli_decompose.json";
  REQUIRE(run("decompose --mode a --input " + data("gwedgeg_n3.json") + " --output " + out.string()).code == 0);
  std::ifstream written(out);
  CHECK(json::parse(written)["mode"] == "a");
  std::filesystem::remove(out);
}

TEST_CASE("sample output is deterministic and round-trips through decompose") {
  const Run a = run("sample --space a --signature 2,1 --seed 11");
  const Run b = run("sample --space a --signature 2,1 --seed 11");
  const Run c = run("sample --space a --signature 2,1 --seed 12");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const auto path = std::filesystem::temp_directory_path() / "eqcurv_cli_sample.json";
  std::ofstream(path) << a.out;
  const Run st = run("decompose --mode st --input " + path.string());
  CHECK(st.code == 0);
  CHECK(json::parse(st.out)["components"].size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("dims at n = 3") {
  const Run r = run("dims --dim 3");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["spaces"]["r"]["empirical_dim"] == 24);
  CHECK(doc["spaces"]["a"]["empirical_dim"] == 6);
  CHECK(doc["spaces"]["f"]["empirical_dim"] == 21);
  CHECK(doc["spaces"]["p"]["empirical_dim"] == 15);
  CHECK(doc["spaces"]["r"]["conclusive"] == true);
  CHECK(run("dims --dim 3").out == r.out);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify --dim 3 --signature 3,0 --samples 4");
  CHECK(ok.code == 0);
  const json doc = json::parse(ok.out);
  for (const auto& [name, entry] : doc.items()) {
    CAPTURE(name);
    CHECK(entry["pass"] == true);
  }
  CHECK(run("verify --dim 3 --samples 2 --tol 0").code == 3);
  const Run one = run("verify --suite completeness_w --suite lemma_4_5 --dim 4 --samples 3");
  CHECK(one.code == 0);
  CHECK(json::parse(one.out).size() == 2);
}

TEST_CASE("chart reports") {
  const Run cur = run("chart --input " + data("flat_cubic_n3.json") + " --point 0.1,0.2,0.3");
  REQUIRE(cur.code == 0);
  const json c = json::parse(cur.out);
  for (const auto& v : c["R_g"]["R"]) CHECK(std::abs(v.get<double>()) <= 1e-14);
  const Run tri = run("chart --input " + data("curved_n3.json") + " --point 0.1,-0.1,0.05 --report triple");
  REQUIRE(tri.code == 0);
  const json t = json::parse(tri.out);
  for (const auto& [name, v] : t["identity_residuals"].items()) {
    CAPTURE(name);
    CHECK(v.get<double>() <= 1e-8);
  }
  CHECK(run("chart --input " + data("curved_n3.json") + " --point 0.1,-0.1,0.05 --report triple").out == tri.out);
}
