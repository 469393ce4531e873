#include "dhankel/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dhankel/errors.hpp"

namespace dhankel {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngSpec RngSpec::child(std::uint64_t id) const noexcept {
  return {seed, mix64(stream * kGolden + mix64(id + 0xD1B54A32D192ED03ULL))};
}

std::uint64_t random_bits(const RngSpec& spec, std::uint64_t index, std::uint64_t lane) noexcept {
  std::uint64_t h = mix64(spec.seed + kGolden);
  h = mix64(h ^ (spec.stream + 0x632BE59BD9B4E019ULL));
  h = mix64(h ^ (index * kGolden + 0x2545F4914F6CDD1DULL));
  return mix64(h + lane * 0xA0761D6478BD642FULL);
}

double uniform01(const RngSpec& spec, std::uint64_t index, std::uint64_t lane) noexcept {
  return static_cast<double>(random_bits(spec, index, lane) >> 11) * 0x1.0p-53;
}

double DistTag::raw_fourth_moment() const noexcept {
  switch (kind) {
    case Distribution::rademacher:
      return 1.0;
    case Distribution::uniform_symmetric:
      return 0.2;  // U(-1,1)
    case Distribution::gaussian:
      return 3.0;
  }
  return 1.0;
}

double DistTag::scale() const noexcept {
  return fourth_moment_normalized ? std::pow(raw_fourth_moment(), -0.25) : 1.0;
}

double DistTag::bound() const noexcept {
  switch (kind) {
    case Distribution::rademacher:
    case Distribution::uniform_symmetric:
      return scale();
    case Distribution::gaussian:
      return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::infinity();
}

double draw(const DistTag& dist, const RngSpec& spec, std::uint64_t index) noexcept {
  double x = 0.0;
  switch (dist.kind) {
    case Distribution::rademacher:
      x = (random_bits(spec, index) >> 63) ? 1.0 : -1.0;
      break;
    case Distribution::uniform_symmetric:
      x = 2.0 * uniform01(spec, index) - 1.0;
      break;
    case Distribution::gaussian: {
      // Box-Muller, cosine branch; u1 in (0, 1]
      const double u1 = static_cast<double>((random_bits(spec, index, 0) >> 11) + 1) * 0x1.0p-53;
      const double u2 = uniform01(spec, index, 1);
      x = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      break;
    }
  }
  return x * dist.scale();
}

std::string_view to_string(Distribution d) noexcept {
  switch (d) {
    case Distribution::rademacher:
      return "rademacher";
    case Distribution::uniform_symmetric:
      return "uniform-symmetric";
    case Distribution::gaussian:
      return "gaussian";
  }
  return "?";
}

Distribution distribution_from_string(std::string_view name) {
  if (name == "rademacher" || name == "bernoulli") return Distribution::rademacher;
  if (name == "uniform-symmetric" || name == "uniform") return Distribution::uniform_symmetric;
  if (name == "gaussian" || name == "normal") return Distribution::gaussian;
  throw PreconditionError("unknown distribution '" + std::string(name) + "'");
}

}  // namespace dhankel
