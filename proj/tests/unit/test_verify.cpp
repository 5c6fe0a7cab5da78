#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "verify.hpp"

using namespace eqcurv;

TEST_SUITE("verify") {

TEST_CASE("check names are unique") {
  const auto names = check_names();
  CHECK(names.size() >= 40);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) CHECK(names[i] != names[j]);
}

TEST_CASE("default configuration passes") {
  SuiteConfig cfg;
  const SuiteReport rep = run_invariant_suite(cfg);
  CHECK(rep.checks.size() == check_names().size());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.failures.empty());
    CHECK(c.worst_residual < 1e-9);
  }
  CHECK(rep.all_passed());
}

TEST_CASE("zero tolerance fails every floating check") {
  SuiteConfig cfg;
  cfg.dims = {3};
  cfg.samples = 2;
  cfg.tol = 0.0;
  const SuiteReport rep = run_invariant_suite(cfg);
  CHECK_FALSE(rep.all_passed());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass == !c.floating);
  }
}

TEST_CASE("single check selection") {
  SuiteConfig cfg;
  cfg.only = {"lemma_6_1_map_identities"};
  const SuiteReport rep = run_invariant_suite(cfg);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "lemma_6_1_map_identities");
  CHECK(rep.checks[0].pass);
  const nlohmann::json doc = suite_report_to_json(rep);
  CHECK(doc.size() == 1);
  CHECK(doc["lemma_6_1_map_identities"]["pass"] == true);
  CHECK(doc["lemma_6_1_map_identities"]["config"]["samples"] == 32);
}

TEST_CASE("configuration errors") {
  SuiteConfig unknown;
  unknown.only = {"no_such_check"};
  CHECK_THROWS_AS((void)run_invariant_suite(unknown), Error);
  SuiteConfig bad_sig;
  bad_sig.dims = {3};
  bad_sig.signatures = {{3, 1}};
  CHECK_THROWS_AS((void)run_invariant_suite(bad_sig), Error);
  SuiteConfig small;
  small.dims = {2};
  CHECK_THROWS_AS((void)run_invariant_suite(small), Error);
  SuiteConfig none;
  none.samples = 0;
  CHECK_THROWS_AS((void)run_invariant_suite(none), Error);
}

TEST_CASE("report is deterministic and seed-sensitive") {
  SuiteConfig cfg;
  cfg.dims = {3};
  cfg.samples = 4;
  const std::string a = suite_report_to_json(run_invariant_suite(cfg)).dump();
  const std::string b = suite_report_to_json(run_invariant_suite(cfg)).dump();
  CHECK(a == b);
  cfg.seed = 9;
  const std::string c = suite_report_to_json(run_invariant_suite(cfg)).dump();
  CHECK(a != c);
}

TEST_CASE("explicit signatures and larger dimension") {
  SuiteConfig cfg;
  cfg.dims = {5};
  cfg.signatures = {{3, 2}};
  cfg.samples = 3;
  cfg.only = {"completeness_w", "completeness_a", "orthogonality_a", "lemma_4_5", "lemma_5_6"};
  const SuiteReport rep = run_invariant_suite(cfg);
  CHECK(rep.checks.size() == 5);
  CHECK(rep.all_passed());
}

} // TEST_SUITE
