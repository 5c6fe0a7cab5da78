#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "decompose.hpp"

namespace eqcurv {

/// Sampling target: a membership space, a W_j/A_j component, or a+s.
struct SpaceTag {
  enum class Kind { co, r, a, s, f, p, t, a_plus_s, W, A };
  Kind kind = Kind::r;
  int index = 0; // 1..8 for W/A

  std::string name() const;
  /// Membership predicate implied by the tag (components of the W/A splitting
  /// check as r).
  Space predicate() const;
  bool operator==(const SpaceTag&) const = default;
};

std::optional<SpaceTag> parse_space_tag(std::string_view tag) noexcept;
/// co r a s f p t a_plus_s W1..W8 A1..A8.
std::vector<SpaceTag> all_space_tags();

/// 64-bit Mersenne Twister stream keyed by (seed, name, index). The key is
/// mixed as splitmix64(seed ^ splitmix64(fnv1a(name) + index)); uniform
/// reals come straight from the top 53 bits so the stream is identical on
/// every platform.
class Stream {
public:
  Stream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

  /// Uniform on [-1, 1).
  double uniform();
  std::uint64_t bits() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a(std::string_view s) noexcept;

Curvature4Tensor uniform_tensor(int dim, Stream& rng);
BilinearForm uniform_form(int dim, Stream& rng);

struct SampleSpec {
  SpaceTag space;
  int dim = 3;
  int p = 3;
  int q = 0;
  std::uint64_t seed = 0;
};

/// Maps an arbitrary tensor into the target space (no emptiness check).
Curvature4Tensor project_into(const SpaceTag& space, const Curvature4Tensor& noise, const ScalarProduct& g);

/// Sample number `index` of the spec's stream. Throws EmptySpace when the
/// projected noise vanishes.
Curvature4Tensor sample(const SampleSpec& spec, std::uint64_t index = 0);
Curvature4Tensor sample(const SpaceTag& space, const ScalarProduct& g, std::uint64_t seed,
                        std::uint64_t index = 0);

struct DimensionReport {
  SpaceTag space;
  int empirical_dim = 0;
  std::optional<int> formula_dim;
  int samples_used = 0;
  /// smallest accepted / largest rejected singular value; +inf when either
  /// side is empty.
  double singular_value_gap = 0.0;
  bool conclusive = false;
};

inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kRankGap = 1e6;

/// Closed-form dimension where one is available.
std::optional<int> formula_dimension(const SpaceTag& space, int n);
/// Upper bound used to size the sample stack.
int candidate_dimension(const SpaceTag& space, int n);

struct RankResult {
  int rank = 0;
  double gap = 0.0;
};

/// Numerical rank of the row stack with the threshold/gap rule above.
RankResult numerical_rank(const Matrix& rows);

/// K = 0 selects 2 * candidate + 4 samples.
DimensionReport empirical_dimension(const SpaceTag& space, const ScalarProduct& g, int samples = 0,
                                    std::uint64_t seed = 0, bool throw_if_inconclusive = true);

} // namespace eqcurv
