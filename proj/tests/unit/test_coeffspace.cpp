#include <doctest.h>

#include <random>

#include "dhankel/coeffspace.hpp"
#include "dhankel/errors.hpp"
#include "oracles.hpp"

using namespace dhankel;

TEST_CASE("TaylorPoly storage") {
  const TaylorPoly p(std::vector<cplx>{});
  CHECK(p.degree() == 0);
  CHECK(p[0] == cplx{0.0});
  const TaylorPoly q{1.0, 2.0, 0.0};
  CHECK(q.degree() == 2);
  CHECK(q.coeff(7) == cplx{0.0});
  CHECK(q.derivative() == TaylorPoly{2.0, 0.0});
  CHECK(q.resized(0) == TaylorPoly{1.0});
  CHECK(TaylorPoly::monomial(3, 2.0)[3] == cplx{2.0});
}

TEST_CASE("space norms") {
  CHECK(space_norm(TaylorPoly{1.0}, SpaceTag::dirichlet_exact) == doctest::Approx(1.0));
  CHECK(space_norm(TaylorPoly{0.0, 1.0}, SpaceTag::bergman) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(space_norm(TaylorPoly::monomial(2), SpaceTag::dirichlet_exact) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  // f = z in A^2 and f = z^2 in D by polar quadrature
  const double bz = oracle::disk_integral([](cplx z) { return cplx(std::norm(z)); }).real();
  CHECK(bz == doctest::Approx(0.5).epsilon(1e-13));
  const double dz2 = oracle::disk_integral([](cplx z) { return cplx(std::norm(2.0 * z)); }).real();
  CHECK(dz2 == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("dirichlet inner product") {
  CHECK(dirichlet_inner(TaylorPoly{0.0, 1.0}, TaylorPoly{0.0, 1.0}) == cplx{1.0});
  CHECK(dirichlet_inner(TaylorPoly::monomial(2), TaylorPoly::monomial(2)) == cplx{2.0});
  CHECK(dirichlet_inner(TaylorPoly{1.0}, TaylorPoly{0.0, 1.0}) == cplx{0.0});

  std::mt19937_64 g(11);
  for (int i = 0; i < 20; ++i) {
    const auto a = oracle::random_coeffs(g, 9), b = oracle::random_coeffs(g, 13);
    const TaylorPoly p(a), q(b);
    CHECK(std::abs(dirichlet_inner(p, q) - std::conj(dirichlet_inner(q, p))) < 1e-14);
    const double n2 = std::pow(space_norm(p, SpaceTag::dirichlet_exact), 2);
    CHECK(dirichlet_inner(p, p).real() == doctest::Approx(n2).epsilon(1e-14));
    // <f, g>_D = f(0) conj(g(0)) + int f' conj(g') dA
    const auto da = oracle::derivative(a), db = oracle::derivative(b);
    const cplx quad = a[0] * std::conj(b[0]) + oracle::disk_integral([&](cplx z) {
                        return oracle::horner(da, z) * std::conj(oracle::horner(db, z));
                      });
    CHECK(std::abs(dirichlet_inner(p, q) - quad) < 1e-11);
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(TaylorPoly{1.0, 1.0}, 0.5) == cplx{1.5});
  CHECK(evaluate(TaylorPoly{0.0, 1.0, 0.0}, cplx{0.0, 0.5}) == cplx{0.0, 0.5});
  CHECK(std::abs(evaluate(kernel_coeffs(0.3, 64), 0.3) - (1.0 + std::log(1.0 / (1.0 - 0.09)))) <= 1e-12);
  CHECK_THROWS_AS(evaluate(TaylorPoly{1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(TaylorPoly{1.0}, cplx{0.6, 0.8}), DomainError);
}

TEST_CASE("kernels") {
  const TaylorPoly k0 = kernel_coeffs(0.0, 5);
  CHECK(k0 == TaylorPoly{1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(kernel_coeffs(0.5, 4)[2] == cplx{0.125});
  CHECK(kernel_coeffs(cplx{0.0, 0.5}, 2)[1] == cplx{0.0, -0.5});
  CHECK(std::abs(dirichlet_inner(TaylorPoly::monomial(3), kernel_coeffs(0.4, 8)) - 0.064) < 1e-15);
  CHECK_THROWS_AS(kernel_coeffs(1.0, 3), DomainError);
}

TEST_CASE("reproducing identity on random polynomials") {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<int> deg(0, 32);
  for (int i = 0; i < 50; ++i) {
    const TaylorPoly f(oracle::random_coeffs(g, std::size_t(deg(g)) + 1));
    const double fn = space_norm(f, SpaceTag::dirichlet_exact);
    for (const cplx w : {cplx{0.95, 0.0}, cplx{-0.3, 0.7}, cplx{0.0, -0.9}}) {
      const cplx lhs = dirichlet_inner(f, kernel_coeffs(w, f.degree()));
      CHECK(std::abs(lhs - oracle::horner(std::vector<cplx>(f.coeffs().begin(), f.coeffs().end()), w)) <= 1e-10 * fn);
    }
  }
}

TEST_CASE("normalized kernels") {
  const NormalizedKernel z = normalized_kernel_coeffs(0.0, 6);
  CHECK(z.kernel == TaylorPoly{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(z.tail_bound == 0.0);
  for (const double t : {0.1, 0.5, 0.9, 0.99})
    for (const std::size_t n : {0u, 5u, 40u, 400u}) {
      const NormalizedKernel k = normalized_kernel_coeffs(t, n);
      const double head = std::pow(space_norm(k.kernel, SpaceTag::dirichlet_exact), 2);
      CHECK(head <= 1.0 + 1e-14);
      CHECK(head + k.tail_bound * k.normalizer >= 1.0 - 1e-14);
      CHECK(k.normalizer == doctest::Approx(1.0 / (1.0 + std::log(1.0 / (1.0 - t * t)))));
    }
  CHECK_THROWS_AS(normalized_kernel_coeffs(1.0, 3), DomainError);
  CHECK_THROWS_AS(normalized_kernel_coeffs(-0.1, 3), DomainError);
}

TEST_CASE("kernel degree for a tail tolerance") {
  for (const double t : {0.3, 0.9, 0.99}) {
    const std::size_t n = kernel_degree_for_tail(t, 1e-10);
    CHECK(kernel_tail_bound(t, n) < 1e-10);
    if (n > 0) CHECK(kernel_tail_bound(t, n - 1) >= 1e-10);
  }
  // t = 0.9: smallest N with 0.81^{N+1} / ((N+1) 0.19) < 1e-10
  std::size_t brute = 0;
  while (std::pow(0.81, double(brute + 1)) / ((brute + 1) * 0.19) >= 1e-10) ++brute;
  CHECK(kernel_degree_for_tail(0.9, 1e-10) == brute);
}

TEST_CASE("norm equivalence and Parseval") {
  std::mt19937_64 g(3);
  for (int i = 0; i < 30; ++i) {
    const auto a = oracle::random_coeffs(g, 33);
    const TaylorPoly f(a);
    const double ex = space_norm(f, SpaceTag::dirichlet_exact), sec = space_norm(f, SpaceTag::dirichlet_section);
    CHECK(ex <= sec * (1 + 1e-15));
    CHECK(sec <= std::sqrt(2.0) * ex * (1 + 1e-15));
    const auto da = oracle::derivative(a);
    const double parseval =
        std::norm(a[0]) + oracle::disk_integral([&](cplx z) { return cplx(std::norm(oracle::horner(da, z))); }).real();
    CHECK(ex * ex == doctest::Approx(parseval).epsilon(1e-12));
  }
}
