#include <doctest.h>

#include <cmath>
#include <set>

#include "decompose.hpp"
#include "error.hpp"
#include "sampling.hpp"

using namespace eqcurv;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

SampleSpec spec(const char* tag, int p, int q, std::uint64_t seed = 0) {
  return {*parse_space_tag(tag), p + q, p, q, seed};
}

} // namespace

TEST_SUITE("sampling") {

TEST_CASE("stream is reproducible and keyed") {
  Stream a(7, "x", 0), b(7, "x", 0), c(7, "x", 1), d(7, "y", 0), e(8, "x", 0);
  for (int i = 0; i < 16; ++i) {
    const std::uint64_t va = a.bits();
    CHECK(va == b.bits());
    CHECK(va != c.bits());
    CHECK(va != d.bits());
    CHECK(va != e.bits());
  }
  Stream u(1, "u");
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("fnv1a and splitmix64 reference values") {
  // published FNV-1a 64 offset basis and the test vector for "a"
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  // first output of the reference splitmix64 generator seeded with 0
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("space tags") {
  const auto tags = all_space_tags();
  CHECK(tags.size() == 24);
  std::set<std::string> names;
  for (const auto& t : tags) {
    names.insert(t.name());
    CHECK(parse_space_tag(t.name()) == t);
  }
  CHECK(names.size() == 24);
  CHECK_FALSE(parse_space_tag("W9").has_value());
  CHECK_FALSE(parse_space_tag("W0").has_value());
  CHECK_FALSE(parse_space_tag("b").has_value());
}

TEST_CASE("samples satisfy their predicate in both signatures") {
  for (const auto& [p, q] : {std::pair{3, 0}, std::pair{2, 1}, std::pair{4, 0}, std::pair{3, 1}}) {
    const ScalarProduct g = ScalarProduct::standard(p, q);
    for (const SpaceTag& tag : all_space_tags()) {
      CAPTURE(tag.name());
      CAPTURE(p);
      try {
        const Curvature4Tensor x = sample(tag, g, 5);
        CHECK(membership(x, g, tag.predicate()).residual <= 1e-10);
        CHECK(x.max_norm() > 0.0);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySpace);
        CHECK(p + q == 3);
      }
    }
  }
}

TEST_CASE("f samples have symmetric Ricci tensor") {
  const ScalarProduct g = ScalarProduct::standard(4, 0);
  const Curvature4Tensor x = sample(spec("f", 4, 0, 3));
  CHECK(max_abs(antisym_part(ricci(x, g))) <= 1e-10 * x.max_norm());
}

TEST_CASE("Weyl spaces are empty at n = 3") {
  CHECK(code_of([] { (void)sample(spec("W6", 3, 0)); }) == ErrorCode::EmptySpace);
  CHECK(code_of([] { (void)sample(spec("A6", 2, 1)); }) == ErrorCode::EmptySpace);
  CHECK(code_of([] { (void)sample(spec("W8", 3, 0)); }) == ErrorCode::EmptySpace);
}

TEST_CASE("sample determinism") {
  const Curvature4Tensor a = sample(spec("a_plus_s", 2, 1, 42));
  const Curvature4Tensor b = sample(spec("a_plus_s", 2, 1, 42));
  const Curvature4Tensor c = sample(spec("a_plus_s", 2, 1, 43));
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK_FALSE(sample(spec("r", 3, 0, 1), 0) == sample(spec("r", 3, 0, 1), 1));
}

TEST_CASE("sample spec validation") {
  CHECK(code_of([] { (void)sample(SampleSpec{*parse_space_tag("r"), 2, 2, 0, 0}); }) ==
        ErrorCode::DimensionTooSmall);
  CHECK(code_of([] { (void)sample(SampleSpec{*parse_space_tag("r"), 4, 3, 0, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("numerical rank") {
  Matrix m = Matrix::Zero(6, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  m(2, 0) = 3.0;
  const RankResult r = numerical_rank(m);
  CHECK(r.rank == 2);
  CHECK(r.gap >= 1e6);
  CHECK(numerical_rank(Matrix::Zero(5, 5)).rank == 0);
  Matrix borderline = Matrix::Identity(4, 4);
  borderline(2, 2) = 1e-7;
  borderline(3, 3) = 1e-9;
  const RankResult b = numerical_rank(borderline);
  CHECK(b.rank == 3);
  CHECK(b.gap < 1e6);
}

TEST_CASE("dimension formulas") {
  auto fd = [](const char* tag, int n) { return formula_dimension(*parse_space_tag(tag), n); };
  CHECK(fd("r", 3) == 24);
  CHECK(fd("a", 3) == 6);
  CHECK(fd("f", 3) == 21);
  CHECK(fd("p", 3) == 15);
  CHECK(fd("r", 4) == 80);
  CHECK(fd("a", 4) == 20);
  CHECK(fd("f", 4) == 74);
  CHECK(fd("p", 4) == 64);
  CHECK(fd("co", 3) == 27);
  CHECK(fd("W6", 3) == 0);
  CHECK(fd("W6", 4) == 10);
  CHECK_FALSE(fd("W7", 4).has_value());
}

TEST_CASE("empirical dimensions at n = 3 and 4") {
  for (const auto& [p, q] : {std::pair{3, 0}, std::pair{2, 1}}) {
    const ScalarProduct g = ScalarProduct::standard(p, q);
    auto dim = [&](const char* tag) { return empirical_dimension(*parse_space_tag(tag), g).empirical_dim; };
    CHECK(dim("r") == 24);
    CHECK(dim("a") == 6);
    CHECK(dim("f") == 21);
    CHECK(dim("p") == 15);
    CHECK(dim("W6") == 0);
    CHECK(dim("s") == 15);
  }
  const ScalarProduct g4 = ScalarProduct::standard(3, 1);
  const DimensionReport r4 = empirical_dimension(*parse_space_tag("r"), g4);
  CHECK(r4.empirical_dim == 80);
  CHECK(r4.formula_dim == 80);
  CHECK(r4.conclusive);
  CHECK(r4.singular_value_gap >= 1e6);
  CHECK(r4.samples_used == 2 * 80 + 4);
  CHECK(empirical_dimension(*parse_space_tag("a"), g4).empirical_dim == 20);
}

TEST_CASE("too few samples is inconclusive") {
  const ScalarProduct g = ScalarProduct::standard(3, 0);
  CHECK(code_of([&] { (void)empirical_dimension(*parse_space_tag("r"), g, 10); }) == ErrorCode::InconclusiveRank);
  const DimensionReport rep = empirical_dimension(*parse_space_tag("r"), g, 10, 0, false);
  CHECK_FALSE(rep.conclusive);
}

} // TEST_SUITE
