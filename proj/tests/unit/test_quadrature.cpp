#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhankel/quadrature.hpp"
#include "dhankel/summation.hpp"

using namespace dhankel;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (const std::size_t n : {1u, 5u, 20u, 64u}) {
    const auto r = quad::gauss_legendre(n, 0.0, 1.0);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], double(p));
      CHECK(s == doctest::Approx(1.0 / double(p + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("adaptive integration") {
  const auto a = quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  // endpoint singularity
  const auto b = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(b.value == doctest::Approx(2.0).epsilon(1e-8));
  const auto c = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(c.value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("pairwise summation") {
  std::vector<double> xs(1000, 0.1);
  CHECK(pairwise_sum(std::span<const double>(xs)) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_accumulate(0, 0, [](std::size_t) { return 1.0; }) == 0.0);
  CHECK(pairwise_accumulate(1, 101, [](std::size_t i) { return double(i); }) == 5050.0);
}
