#include <doctest.h>

#include <cmath>

#include "dhankel/rng.hpp"

using namespace dhankel;

TEST_CASE("streams are pure functions of (seed, stream, index)") {
  const RngSpec a{42, 7};
  CHECK(random_bits(a, 12) == random_bits(RngSpec{42, 7}, 12));
  CHECK(random_bits(a, 12) != random_bits(a, 13));
  CHECK(random_bits(a, 12) != random_bits(RngSpec{42, 8}, 12));
  CHECK(random_bits(a, 12) != random_bits(RngSpec{43, 7}, 12));
  CHECK(!(a.child(1) == a.child(2)));
  CHECK(a.child(3) == RngSpec{42, 7}.child(3));
}

TEST_CASE("uniform draws lie in [0,1)") {
  const RngSpec s{1, 2};
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = uniform01(s, i);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += u;
  }
  CHECK(mean / 1e5 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("distributions: normalization and moments") {
  for (const Distribution d : {Distribution::rademacher, Distribution::uniform_symmetric, Distribution::gaussian}) {
    const DistTag tag{d, true};
    const RngSpec s{99, std::uint64_t(d)};
    double m1 = 0.0, m4 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double x = draw(tag, s, std::uint64_t(i));
      m1 += x;
      m4 += x * x * x * x;
      if (std::isfinite(tag.bound())) REQUIRE(std::abs(x) <= tag.bound() * (1 + 1e-15));
    }
    CHECK(std::abs(m1 / n) < 0.01);
    CHECK(m4 / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(distribution_from_string(to_string(d)) == d);
  }
  CHECK(DistTag{Distribution::gaussian, true}.scale() == doctest::Approx(std::pow(3.0, -0.25)));
  CHECK(DistTag{Distribution::uniform_symmetric, true}.scale() == doctest::Approx(std::pow(5.0, 0.25)));
  CHECK(DistTag{Distribution::rademacher, false}.raw_fourth_moment() == 1.0);
  const DistTag raw{Distribution::rademacher, false};
  for (int i = 0; i < 100; ++i) CHECK(std::abs(draw(raw, RngSpec{5, 5}, std::uint64_t(i))) == 1.0);
}
