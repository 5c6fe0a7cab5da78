#include "sampling.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "error.hpp"

namespace eqcurv {

std::string SpaceTag::name() const {
  switch (kind) {
  case Kind::co: return "co";
  case Kind::r: return "r";
  case Kind::a: return "a";
  case Kind::s: return "s";
  case Kind::f: return "f";
  case Kind::p: return "p";
  case Kind::t: return "t";
  case Kind::a_plus_s: return "a_plus_s";
  case Kind::W: return "W" + std::to_string(index);
  case Kind::A: return "A" + std::to_string(index);
  }
  return "?";
}

Space SpaceTag::predicate() const {
  switch (kind) {
  case Kind::co: return Space::co;
  case Kind::a: return Space::a;
  case Kind::s: return Space::s;
  case Kind::f: return Space::f;
  case Kind::p: return Space::p;
  case Kind::t: return Space::t;
  default: return Space::r;
  }
}

std::optional<SpaceTag> parse_space_tag(std::string_view tag) noexcept {
  using K = SpaceTag::Kind;
  if (tag == "a_plus_s") return SpaceTag{K::a_plus_s, 0};
  if (auto s = parse_space(tag)) {
    switch (*s) {
    case Space::co: return SpaceTag{K::co, 0};
    case Space::r: return SpaceTag{K::r, 0};
    case Space::a: return SpaceTag{K::a, 0};
    case Space::s: return SpaceTag{K::s, 0};
    case Space::f: return SpaceTag{K::f, 0};
    case Space::p: return SpaceTag{K::p, 0};
    case Space::t: return SpaceTag{K::t, 0};
    }
  }
  if (tag.size() == 2 && (tag[0] == 'W' || tag[0] == 'A') && tag[1] >= '1' && tag[1] <= '8')
    return SpaceTag{tag[0] == 'W' ? K::W : K::A, tag[1] - '0'};
  return std::nullopt;
}

std::vector<SpaceTag> all_space_tags() {
  using K = SpaceTag::Kind;
  std::vector<SpaceTag> out{{K::co, 0}, {K::r, 0}, {K::a, 0}, {K::s, 0}, {K::f, 0},
                            {K::p, 0},  {K::t, 0}, {K::a_plus_s, 0}};
  for (int j = 1; j <= 8; ++j) out.push_back({K::W, j});
  for (int j = 1; j <= 8; ++j) out.push_back({K::A, j});
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Stream::Stream(std::uint64_t seed, std::string_view name, std::uint64_t index)
    : engine_(splitmix64(seed ^ splitmix64(fnv1a(name) + index))) {}

double Stream::uniform() {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

Curvature4Tensor uniform_tensor(int dim, Stream& rng) {
  Curvature4Tensor t(dim);
  for (double& v : t.entries()) v = rng.uniform();
  return t;
}

BilinearForm uniform_form(int dim, Stream& rng) {
  BilinearForm b(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) b(i, j) = rng.uniform();
  return b;
}

Curvature4Tensor project_into(const SpaceTag& space, const Curvature4Tensor& noise, const ScalarProduct& g) {
  using K = SpaceTag::Kind;
  require_same_dim(noise.dim(), g.dim(), "project_into");
  if (space.kind == K::co) return antisymmetrize_first_pair(noise);
  const Curvature4Tensor r = bianchi_project(noise);
  switch (space.kind) {
  case K::r: return r;
  case K::a: return psi(r);
  case K::s: return mu(r);
  case K::a_plus_s: return psi(r) + mu(r);
  case K::f: return r - w_components(r, g)[2];
  case K::p: {
    const auto w = w_components(r, g);
    return r - w[0] - w[1] - w[2];
  }
  case K::t: return traceless_core(r, g, 1e-8);
  case K::W:
  case K::A: {
    if (space.index < 1 || space.index > 8) fail(ErrorCode::UnknownSpace, "component index out of range");
    return components(space.kind == K::W ? Mode::W : Mode::A, r, g)[static_cast<std::size_t>(space.index - 1)];
  }
  default: break;
  }
  fail(ErrorCode::UnknownSpace, "unknown sampling space");
}

Curvature4Tensor sample(const SpaceTag& space, const ScalarProduct& g, std::uint64_t seed, std::uint64_t index) {
  Stream rng(seed, space.name(), index);
  const Curvature4Tensor noise = uniform_tensor(g.dim(), rng);
  Curvature4Tensor out = project_into(space, noise, g);
  if (out.max_norm() <= 1e-10 * noise.max_norm())
    fail(ErrorCode::EmptySpace, "space " + space.name() + " is zero-dimensional at n = " + std::to_string(g.dim()));
  return out;
}

Curvature4Tensor sample(const SampleSpec& spec, std::uint64_t index) {
  if (spec.dim < 3) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 3");
  if (spec.p + spec.q != spec.dim)
    fail(ErrorCode::InvalidArgument, "signature does not add up to the dimension");
  return sample(spec.space, ScalarProduct::standard(spec.p, spec.q), spec.seed, index);
}

std::optional<int> formula_dimension(const SpaceTag& space, int n) {
  using K = SpaceTag::Kind;
  const int n2 = n * n;
  switch (space.kind) {
  case K::co: return n * n * n * (n - 1) / 2;
  case K::r: return n2 * (n2 - 1) / 3;
  case K::a: return n2 * (n2 - 1) / 12;
  case K::f: return n * (n - 1) * (2 * n2 + 2 * n - 3) / 6;
  case K::p: return n2 * (n2 - 4) / 3;
  case K::t: return n2 * (n2 - 1) / 3 - 2 * n2 + 1;
  case K::W:
  case K::A: {
    const int j = space.index;
    const bool w = space.kind == K::W;
    if (j == 1) return 1;
    if (j == 6) return n * (n + 1) * (n + 2) * (n - 3) / 12;
    if ((w && (j == 2 || j == 5)) || (!w && (j == 2 || j == 3))) return n * (n + 1) / 2 - 1;
    if ((w && (j == 3 || j == 4)) || (!w && (j == 4 || j == 5))) return n * (n - 1) / 2;
    return std::nullopt;
  }
  default: return std::nullopt;
  }
}

int candidate_dimension(const SpaceTag& space, int n) {
  if (auto f = formula_dimension(space, n)) return *f;
  return n * n * (n * n - 1) / 3;
}

RankResult numerical_rank(const Matrix& rows) {
  RankResult out;
  if (rows.size() == 0) {
    out.gap = std::numeric_limits<double>::infinity();
    return out;
  }
  Eigen::BDCSVD<Matrix> svd(rows);
  const auto& s = svd.singularValues();
  const double threshold = kRankThreshold * std::max(s(0), 1.0);
  int rank = 0;
  while (rank < s.size() && s(rank) > threshold) ++rank;
  out.rank = rank;
  if (rank == 0 || rank == s.size() || s(rank) == 0.0)
    out.gap = std::numeric_limits<double>::infinity();
  else
    out.gap = s(rank - 1) / s(rank);
  return out;
}

DimensionReport empirical_dimension(const SpaceTag& space, const ScalarProduct& g, int samples,
                                    std::uint64_t seed, bool throw_if_inconclusive) {
  const int n = g.dim();
  const int k = samples > 0 ? samples : 2 * candidate_dimension(space, n) + 4;
  const auto size = static_cast<Eigen::Index>(n) * n * n * n;
  Matrix rows(k, size);
  for (int i = 0; i < k; ++i) {
    Stream rng(seed, space.name(), static_cast<std::uint64_t>(i));
    rows.row(i) = to_vector(project_into(space, uniform_tensor(n, rng), g)).transpose();
  }
  const RankResult rr = numerical_rank(rows);
  DimensionReport rep;
  rep.space = space;
  rep.empirical_dim = rr.rank;
  rep.formula_dim = formula_dimension(space, n);
  rep.samples_used = k;
  rep.singular_value_gap = rr.gap;
  rep.conclusive = rr.gap >= kRankGap && rr.rank < k;
  if (!rep.conclusive && throw_if_inconclusive)
    fail(ErrorCode::InconclusiveRank, "rank of " + space.name() + " is inconclusive (gap " +
                                          std::to_string(rr.gap) + ")");
  return rep;
}

} // namespace eqcurv
