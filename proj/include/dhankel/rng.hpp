#pragma once

#include <cstdint>
#include <string_view>

namespace dhankel {

/// Key of a counter-based random stream. Draw i of stream (seed, stream) is a
/// pure function of (seed, stream, i), so coefficient n gets the same
/// multiplier regardless of how many coefficients are sampled.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Independent child stream (e.g. one per replica).
  RngSpec child(std::uint64_t id) const noexcept;

  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

/// 64 random bits for (spec, index, lane).
std::uint64_t random_bits(const RngSpec& spec, std::uint64_t index, std::uint64_t lane = 0) noexcept;

/// Uniform on [0, 1) with 53 random bits.
double uniform01(const RngSpec& spec, std::uint64_t index, std::uint64_t lane = 0) noexcept;

enum class Distribution { rademacher, uniform_symmetric, gaussian };

/// Mean-zero multiplier law with finite fourth moment. When
/// fourth_moment_normalized is set, samples are scaled so that E[X^4] = 1.
struct DistTag {
  Distribution kind = Distribution::rademacher;
  bool fourth_moment_normalized = true;

  /// E[X^4] of the unscaled law.
  double raw_fourth_moment() const noexcept;
  /// Factor applied to raw samples.
  double scale() const noexcept;
  /// sup |X| after scaling, or +inf for unbounded laws.
  double bound() const noexcept;

  friend bool operator==(const DistTag&, const DistTag&) = default;
};

/// X_index drawn from `dist` on stream `spec`.
double draw(const DistTag& dist, const RngSpec& spec, std::uint64_t index) noexcept;

std::string_view to_string(Distribution d) noexcept;
Distribution distribution_from_string(std::string_view name);

}  // namespace dhankel
