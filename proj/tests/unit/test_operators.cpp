#include <doctest.h>

#include <cmath>
#include <random>

#include "dhankel/errors.hpp"
#include "dhankel/operators.hpp"
#include "oracles.hpp"

using namespace dhankel;

namespace {

std::vector<cplx> brute_hankel(const std::vector<cplx>& lambda, const std::vector<cplx>& a, std::size_t n_out) {
  std::vector<cplx> b(n_out + 1);
  for (std::size_t n = 0; n <= n_out; ++n)
    for (std::size_t k = 0; k < a.size(); ++k) b[n] += lambda[n + k] * a[k];
  return b;
}

}  // namespace

TEST_CASE("hankel_apply matches the direct double loop") {
  std::mt19937_64 g(5);
  const auto lam = oracle::random_coeffs(g, 200);
  const SymbolSeq s = SymbolSeq::explicit_list(lam);
  for (int i = 0; i < 10; ++i) {
    const auto a = oracle::random_coeffs(g, 1 + std::size_t(i) * 7);
    const TaylorPoly out = hankel_apply(s, TaylorPoly(a), 40);
    const auto ref = brute_hankel(lam, a, 40);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(std::abs(out[n] - ref[n]) < 1e-13);
  }
  CHECK_THROWS_AS(hankel_apply(s, TaylorPoly(oracle::random_coeffs(g, 10)), 5, 3), PreconditionError);
  // Hilbert symbol on 1: b_n = 1/(n+1)
  const TaylorPoly h = hankel_apply(SymbolSeq::hilbert(), TaylorPoly{1.0}, 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(h[n] == cplx{1.0 / double(n + 1)});
}

TEST_CASE("cesaro_apply") {
  // classical Cesaro on 1/(1-z) truncated: c_n = (n+1)/(n+1) = 1
  const SymbolSeq ces = SymbolSeq::powerlog(1.0, 0.0);
  const TaylorPoly ones(std::vector<cplx>(21, 1.0));
  const TaylorPoly c = cesaro_apply(ces, ones, 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(std::abs(c[n] - 1.0) < 1e-15);
  // beyond the input degree the partial sum stays frozen
  const TaylorPoly d = cesaro_apply(ces, TaylorPoly{1.0, 1.0}, 4);
  CHECK(std::abs(d[4] - 2.0 / 5.0) < 1e-16);
}

TEST_CASE("Hilbert matrix section entries") {
  const SectionMatrix m = section_matrix(SymbolSeq::hilbert(), OperatorKind::hankel, SpaceTag::dirichlet_section, 6);
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 6; ++k)
      CHECK(std::abs(m.entries(j, k) - std::sqrt((j + 1.0) / (k + 1.0)) / (j + k + 1.0)) < 1e-16);
  CHECK_THROWS_AS(section_matrix(SymbolSeq::hilbert(), OperatorKind::hankel, SpaceTag::dirichlet_exact, 4),
                  PreconditionError);
  CHECK_THROWS_AS(section_matrix(SymbolSeq::hilbert(), OperatorKind::bilinear, SpaceTag::bergman, 4), PreconditionError);
}

TEST_CASE("section matrices act like the coefficient operators") {
  // weighted section W^{1/2} H W^{-1/2} applied to W^{1/2} a equals W^{1/2} (H a)
  std::mt19937_64 g(17);
  const SymbolSeq s = SymbolSeq::explicit_list(oracle::random_coeffs(g, 40));
  const std::size_t n = 20;
  const auto a = oracle::random_coeffs(g, n);
  for (const OperatorKind kind : {OperatorKind::hankel, OperatorKind::cesaro}) {
    const SectionMatrix m = section_matrix(s, kind, SpaceTag::dirichlet_section, n);
    Eigen::VectorXcd x(n);
    for (std::size_t k = 0; k < n; ++k) x(long(k)) = std::sqrt(double(k + 1)) * a[k];
    const Eigen::VectorXcd y = m.entries * x;
    const TaylorPoly ref =
        kind == OperatorKind::hankel ? hankel_apply(s, TaylorPoly(a), n - 1) : cesaro_apply(s, TaylorPoly(a), n - 1);
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(y(long(j)) - std::sqrt(double(j + 1)) * ref[j]) < 1e-12);
  }
}

TEST_CASE("Bergman sections are exact transposes") {
  std::mt19937_64 g(23);
  const SymbolSeq syms[] = {SymbolSeq::explicit_list(oracle::random_coeffs(g, 100)), SymbolSeq::powerlog(0.8, 1.3),
                            SymbolSeq::lacunary({1, 3, 9, 27}, {1.0, cplx{0.0, 0.5}, 0.25, 0.1})};
  for (const auto& s : syms)
  {
    const SectionMatrix d = section_matrix(s, OperatorKind::hankel, SpaceTag::dirichlet_section, 30);
    const SectionMatrix b = section_matrix(s, OperatorKind::hankel, SpaceTag::bergman, 30);
    CHECK((b.entries - d.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("bilinear-form sections") {
  const SymbolSeq b = SymbolSeq::explicit_list({0.0, cplx{1.0, 2.0}, 3.0, 0.5});
  const SectionMatrix m = section_matrix(b, OperatorKind::bilinear, SpaceTag::dirichlet_section, 3);
  CHECK(m.entries(0, 0) == cplx{0.0});
  CHECK(std::abs(m.entries(0, 1) - 1.0 / std::sqrt(2.0) * cplx{1.0, -2.0}) < 1e-15);
  CHECK(std::abs(m.entries(1, 1) - 2.0 / 2.0 * 3.0) < 1e-15);
  CHECK(m.entries(1, 2) == m.entries(2, 1));
}

TEST_CASE("power iteration against a full SVD") {
  std::mt19937_64 g(29);
  const SymbolSeq syms[] = {SymbolSeq::hilbert(), SymbolSeq::powerlog(1.0, 1.0),
                            SymbolSeq::explicit_list(oracle::random_coeffs(g, 80)),
                            SymbolSeq::lacunary({1, 2, 4, 8, 16, 32}, {1.0, 0.7, 0.5, 0.35, 0.25, 0.18})};
  for (const auto& s : syms)
    for (const OperatorKind k : {OperatorKind::hankel, OperatorKind::cesaro})
      for (const std::size_t n : {1u, 8u, 48u}) {
        const SectionMatrix m = section_matrix(s, k, SpaceTag::dirichlet_section, n);
        const SingularValue sv = top_singular_value(m, 1e-13, 5000);
        const double ref = oracle::svd_norm(m.entries);
        CHECK(sv.sigma <= ref * (1 + 1e-12));
        CHECK(sv.sigma == doctest::Approx(ref).epsilon(1e-6));
      }
  const SingularValue z = top_singular_value(Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(5, 5)));
  CHECK(z.sigma == 0.0);
  CHECK(z.converged);
  CHECK(default_max_iterations(1024) == 700);
}

TEST_CASE("real fast path agrees with the complex path") {
  const SectionMatrix m = section_matrix(SymbolSeq::hilbert(), OperatorKind::hankel, SpaceTag::dirichlet_section, 64);
  const SingularValue a = top_singular_value(m.entries);
  const Eigen::MatrixXd re = m.entries.real();
  const SingularValue b = top_singular_value(re);
  CHECK(a.sigma == b.sigma);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("tail sections") {
  const SymbolSeq s = SymbolSeq::powerlog(1.0, 1.0);
  const SectionMatrix full = section_matrix(s, OperatorKind::hankel, SpaceTag::dirichlet_section, 64);
  double prev = 1e300;
  for (const std::size_t m : {0u, 1u, 4u, 16u, 40u}) {
    const SingularValue sv = tail_section_norm(s, OperatorKind::hankel, m, 64, 1e-13, 5000);
    const double ref = oracle::svd_norm(full.entries.bottomRightCorner(long(64 - m), long(64 - m)));
    CHECK(sv.sigma == doctest::Approx(ref).epsilon(1e-6));
    CHECK(sv.sigma <= prev * (1 + 1e-9));
    prev = sv.sigma;
  }
  CHECK_THROWS_AS(tail_section_norm(s, OperatorKind::hankel, 64, 64), PreconditionError);
}

TEST_CASE("Cesaro closed form against apply-then-norm") {
  std::mt19937_64 g(31);
  const SymbolSeq s = SymbolSeq::explicit_list(oracle::random_coeffs(g, 50));
  for (const double t : {0.0, 0.2, 0.7, 0.95}) {
    const std::size_t n = 60;
    const double closed = cesaro_rkt_norm(s, t, n);
    // independent: k_t coefficients built here, partial sums, exact Dirichlet weights
    const double norm2 = 1.0 + std::log(1.0 / (1.0 - t * t));
    double total = 0.0, partial = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      partial += k == 0 ? 1.0 : std::pow(t, double(k)) / double(k);
      const double w = k == 0 ? 1.0 : double(k);
      total += w * std::norm(s.value(k)) * partial * partial;
    }
    CHECK(closed == doctest::Approx(std::sqrt(total / norm2)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(cesaro_rkt_norm(s, 1.0, 4), DomainError);
}
