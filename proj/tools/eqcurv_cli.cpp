#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqcurv/eqcurv.h"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct Signature {
  int p = -1;
  int q = -1;
};

struct UsageError {
  std::string message;
};

struct DataError {
  std::string message;
};

Signature parse_signature(const std::string& text) {
  Signature s;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> s.p >> comma >> s.q) || comma != ',' || !in.eof() || s.p < 0 || s.q < 0)
    throw UsageError{"--signature expects P,Q with nonnegative integers, got '" + text + "'"};
  return s;
}

Signature resolve_signature(const std::string& text, int dim) {
  if (text.empty()) {
    if (dim < 0) throw UsageError{"one of --dim or --signature is required"};
    return {dim, 0};
  }
  const Signature s = parse_signature(text);
  if (dim >= 0 && s.p + s.q != dim)
    throw UsageError{"--signature " + text + " does not add up to --dim " + std::to_string(dim)};
  return s;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError{"--point: cannot parse '" + item + "'"};
    }
    if (used != item.size()) throw UsageError{"--point: cannot parse '" + item + "'"};
    out.push_back(v);
  }
  if (out.empty()) throw UsageError{"--point must list the coordinates"};
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(int status) {
  if (status != EQC_OK)
    throw DataError{std::string(eqc_status_string(status)) + ": " + eqc_last_error_message()};
}

void emit(char* text, const std::string& output) {
  const std::string doc(text);
  eqc_free_string(text);
  if (output.empty()) {
    std::cout << doc << std::flush;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << doc)) throw DataError{"cannot write " + output};
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature tensor decompositions and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", eqc_version());

  std::string mode, input, output;
  auto* decompose = app.add_subcommand("decompose", "Split a curvature tensor into its components");
  decompose->add_option("--mode", mode, "w, a or st")->required()->check(CLI::IsMember({"w", "a", "st"}));
  decompose->add_option("--input", input, "tensor document")->required();
  decompose->add_option("--output", output, "write the result here instead of stdout");

  std::string space, signature;
  int dim = -1;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "Draw a seeded tensor from a named space");
  sample->add_option("--space", space, "co r a s f p t a_plus_s W1..W8 A1..A8")->required();
  sample->add_option("--dim", dim, "dimension");
  sample->add_option("--signature", signature, "P,Q");
  sample->add_option("--seed", seed, "seed");

  int samples = 0;
  auto* dims = app.add_subcommand("dims", "Empirical dimensions of every named space");
  dims->add_option("--dim", dim, "dimension");
  dims->add_option("--signature", signature, "P,Q");
  dims->add_option("--samples", samples, "rows per rank estimate (0 picks a default)")->check(CLI::NonNegativeNumber);
  dims->add_option("--seed", seed, "seed");

  std::vector<std::string> suites;
  int verify_samples = 32;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--suite", suites, "restrict to named checks");
  verify->add_option("--dim", dim, "dimension (default 3 and 4)");
  verify->add_option("--signature", signature, "P,Q");
  verify->add_option("--samples", verify_samples, "samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--tol", tol, "residual tolerance");

  std::string point, report = "curvature";
  auto* chart = app.add_subcommand("chart", "Curvature of a polynomial conjugate triple at a point");
  chart->add_option("--input", input, "chart document")->required();
  chart->add_option("--point", point, "x1,...,xn")->required();
  chart->add_option("--report", report, "curvature or triple")->check(CLI::IsMember({"curvature", "triple"}));
  chart->add_option("--output", output, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    char* text = nullptr;
    if (*decompose) {
      const std::string doc = read_file(input);
      check(eqc_decompose_json(mode.c_str(), doc.c_str(), &text));
      emit(text, output);
    } else if (*sample) {
      const Signature s = resolve_signature(signature, dim);
      check(eqc_sample_json(space.c_str(), s.p, s.q, seed, &text));
      emit(text, "");
    } else if (*dims) {
      const Signature s = resolve_signature(signature, dim);
      check(eqc_dims_json(s.p, s.q, samples, seed, &text));
      emit(text, "");
    } else if (*verify) {
      std::ostringstream cfg;
      cfg.precision(17);
      cfg << "{\"samples\":" << verify_samples << ",\"seed\":" << seed << ",\"tol\":" << tol;
      if (dim >= 0 || !signature.empty()) {
        const Signature s = resolve_signature(signature, dim);
        cfg << ",\"dims\":[" << s.p + s.q << "]";
        if (!signature.empty()) cfg << ",\"signatures\":[[" << s.p << "," << s.q << "]]";
      }
      if (!suites.empty()) {
        cfg << ",\"only\":[";
        for (std::size_t i = 0; i < suites.size(); ++i) cfg << (i ? "," : "") << json_string(suites[i]);
        cfg << "]";
      }
      cfg << "}";
      int passed = 0;
      const int status = eqc_verify_json(cfg.str().c_str(), &text, &passed);
      if (status == EQC_INVALID_ARGUMENT) throw UsageError{eqc_last_error_message()};
      check(status);
      emit(text, "");
      if (!passed) {
        std::cerr << "verification failed\n";
        return kExitVerify;
      }
    } else if (*chart) {
      const std::string doc = read_file(input);
      const std::vector<double> x = parse_point(point);
      check(eqc_chart_json(doc.c_str(), x.data(), x.size(), report.c_str(), &text));
      emit(text, output);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitData;
  }
  return 0;
}
