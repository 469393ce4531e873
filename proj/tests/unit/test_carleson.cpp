#include <doctest.h>

#include <cmath>
#include <random>

#include "dhankel/carleson.hpp"
#include "dhankel/errors.hpp"
#include "oracles.hpp"

using namespace dhankel;

namespace {

TaylorPoly random_poly(std::mt19937_64& g, std::size_t degree) { return TaylorPoly(oracle::random_coeffs(g, degree + 1)); }

Eigen::MatrixXcd polar_gram(const TaylorPoly& b, std::size_t n) {
  const std::vector<cplx> db = oracle::derivative({b.coeffs().begin(), b.coeffs().end()});
  Eigen::MatrixXcd g(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= n; ++k)
      g(Eigen::Index(j), Eigen::Index(k)) = oracle::disk_integral([&](cplx z) {
        return std::pow(z, int(j)) * std::pow(std::conj(z), int(k)) * std::norm(oracle::horner(db, z));
      });
  return g;
}

}  // namespace

TEST_CASE("Gram matrices of monomials") {
  const GramMatrix g1 = symbol_gram(TaylorPoly{0.0, 1.0}, 6);
  CHECK(g1.exact);
  const GramMatrix g2 = symbol_gram(TaylorPoly{0.0, 0.0, 1.0}, 6);
  for (Eigen::Index j = 0; j <= 6; ++j)
    for (Eigen::Index k = 0; k <= 6; ++k) {
      CHECK(std::abs(g1.entries(j, k) - (j == k ? 1.0 / double(j + 1) : 0.0)) < 1e-15);
      CHECK(std::abs(g2.entries(j, k) - (j == k ? 4.0 / double(j + 2) : 0.0)) < 1e-15);
    }
}

TEST_CASE("Gram matrix against polar quadrature") {
  std::mt19937_64 g(5);
  for (int trial = 0; trial < 5; ++trial) {
    const TaylorPoly b = random_poly(g, 4);
    const Eigen::MatrixXcd exact = symbol_gram(b, 5).entries;
    const Eigen::MatrixXcd quad = polar_gram(b, 5);
    CHECK((exact - quad).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(exact.isApprox(exact.adjoint(), 1e-14));
    CHECK(oracle::min_eigen(exact) > -1e-12);
  }
}

TEST_CASE("finite-test Carleson norms") {
  CHECK(finite_test_carleson_norm(TaylorPoly{0.0, 1.0}, 16) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x_norm(TaylorPoly{1.0, 1.0}, 16) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(finite_test_carleson_norm(TaylorPoly{3.0}, 8) == 0.0);

  std::mt19937_64 g(17);
  for (int trial = 0; trial < 10; ++trial) {
    const TaylorPoly b = random_poly(g, 6);
    double prev = 0.0;
    for (std::size_t n : {2, 4, 8, 16}) {
      const double v = finite_test_carleson_norm(b, n);
      CHECK(v >= prev * (1 - 1e-10));
      prev = v;
    }
    TaylorPoly scaled = b;
    const cplx c{0.6, -1.7};
    for (auto& x : scaled.coeffs()) x *= c;
    CHECK(finite_test_carleson_norm(scaled, 8) == doctest::Approx(std::norm(c) * finite_test_carleson_norm(b, 8)).epsilon(1e-9));

    // against a dense generalized eigensolve
    const Eigen::MatrixXcd gm = symbol_gram(b, 8).entries;
    Eigen::VectorXd d(9);
    for (Eigen::Index i = 0; i < 9; ++i) d(i) = i == 0 ? 1.0 : 1.0 / std::sqrt(double(i));
    const Eigen::MatrixXcd m = d.asDiagonal() * gm * d.asDiagonal();
    CHECK(finite_test_carleson_norm(b, 8) == doctest::Approx(oracle::top_eigen(m)).epsilon(1e-9));
  }
}

TEST_CASE("annulus restriction") {
  for (double delta : {0.5, 0.125, 0.01})
    CHECK(restricted_carleson_norm(TaylorPoly{0.0, 1.0}, 0, delta) ==
          doctest::Approx(1.0 - (1.0 - delta) * (1.0 - delta)).epsilon(1e-13));
  CHECK_THROWS_AS(restricted_carleson_norm(TaylorPoly{0.0, 1.0}, 4, 0.0), DomainError);
  CHECK_THROWS_AS(restricted_carleson_norm(TaylorPoly{0.0, 1.0}, 4, 1.0), DomainError);

  std::mt19937_64 g(23);
  const TaylorPoly b = random_poly(g, 5);
  const double full = finite_test_carleson_norm(b, 12);
  double prev = full;
  for (double delta : {0.5, 0.25, 0.125, 0.0625}) {
    const double r = restricted_carleson_norm(b, 12, delta);
    CHECK(r <= prev * (1 + 1e-10));
    CHECK(r >= 0.0);
    prev = r;
  }
  const GramMatrix a = annulus_gram(b, 6, 0.3);
  CHECK(oracle::min_eigen(a.entries) > -1e-12);
  CHECK(oracle::min_eigen(symbol_gram(b, 6).entries - a.entries) > -1e-12);
}

TEST_CASE("mixed norms") {
  CHECK(mixed_norm(TaylorPoly{0.0, 1.0}, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mixed_norm(TaylorPoly{0.0, 0.0, 1.0}, INFINITY) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(mixed_norm(TaylorPoly{0.0, 0.0, 1.0}, 3.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(mixed_norm(TaylorPoly{0.0, 1.0}, 2.0), DomainError);
  CHECK_THROWS_AS(mixed_norm(TaylorPoly{0.0, 1.0}, 1.5), DomainError);
  // M_p increases with p
  const TaylorPoly phi{0.0, 1.0, 0.5, -0.25};
  CHECK(mixed_norm(phi, 3.0) <= mixed_norm(phi, 6.0) * (1 + 1e-12));
  CHECK(mixed_norm(phi, 6.0) <= mixed_norm(phi, INFINITY) * (1 + 1e-9));
  const TaylorPoly twice{0.0, 2.0, 1.0, -0.5};
  CHECK(mixed_norm(twice, 4.0) == doctest::Approx(4.0 * mixed_norm(phi, 4.0)).epsilon(1e-12));
}

TEST_CASE("general Hankel classification") {
  const ClassReport constant = classify_hankel_general(TaylorPoly{2.0}, {16, 32, 64});
  CHECK(constant.verdict == Verdict::compact);
  CHECK(constant.applicability == Applicability::heuristic);
  const ClassReport poly = classify_hankel_general(TaylorPoly{0.0, 1.0, 0.5}, {16, 32, 64});
  CHECK(poly.verdict == Verdict::compact);
  CHECK_FALSE(poly.vanishing.empty());

  const TaylorPoly c = conjugate_symbol_poly(SymbolSeq::explicit_list({cplx{1, 2}, cplx{0, -1}}), 3);
  CHECK(c.degree() == 3);
  CHECK(c[0] == cplx{1, -2});
  CHECK(c[1] == cplx{0, 1});
  CHECK(c[2] == cplx{0.0});
}

TEST_CASE("small mixed norm and restricted-norm decay") {
  std::mt19937_64 g(7);
  int used = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const TaylorPoly b = random_poly(g, std::size_t(1 + trial % 3));
    if (!(mixed_norm(b, 4.0) <= 3.0)) continue;
    ++used;
    CHECK(restricted_carleson_norm(b, 256, 1.0 / 64) < 0.1 * finite_test_carleson_norm(b, 256));
  }
  CHECK(used >= 20);

  // lacunary symbol in the Dirichlet space sits just above the 10% line at this resolution
  const TaylorPoly lac = conjugate_symbol_poly(SymbolSeq::lacunary_law({2, 0.5, 1.0, 1.0}), 256);
  const double frac = restricted_carleson_norm(lac, 256, 1.0 / 64) / finite_test_carleson_norm(lac, 256);
  CHECK(frac == doctest::Approx(0.1050).epsilon(1e-3));
  CHECK(restricted_carleson_norm(lac, 256, 1.0 / 256) < restricted_carleson_norm(lac, 256, 1.0 / 64));
}
