#include <doctest.h>

#include <cmath>
#include <random>

#include "dhankel/errors.hpp"
#include "dhankel/stochastic.hpp"
#include "oracles.hpp"

using namespace dhankel;

TEST_CASE("sample_symbol") {
  const SymbolSeq zero = sample_symbol(SymbolSeq::explicit_list({}), {}, {1, 1}, 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(zero.value(n) == cplx{0.0});
  const SymbolSeq base = SymbolSeq::explicit_list({cplx{1.0, 2.0}, 0.5, cplx{0.0, -3.0}, 0.25});
  const SymbolSeq w = sample_symbol(base, {Distribution::rademacher, true}, {7, 3}, 3);
  CHECK(w.monotonicity() == Monotonicity::general);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(std::abs(w.value(n)) == doctest::Approx(std::abs(base.value(n))).epsilon(1e-15));
    CHECK(std::abs(w.value(n) / std::conj(base.value(n))) == doctest::Approx(1.0).epsilon(1e-15));
  }
  const SymbolSeq again = sample_symbol(base, {Distribution::rademacher, true}, {7, 3}, 3);
  CHECK(w.values(4) == again.values(4));
  // multipliers do not depend on the truncation length
  const SymbolSeq longer = sample_symbol(base, {Distribution::gaussian, true}, {7, 3}, 30);
  const SymbolSeq shorter = sample_symbol(base, {Distribution::gaussian, true}, {7, 3}, 2);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(longer.value(n) == shorter.value(n));
}

TEST_CASE("exact Rademacher fourth moments") {
  CHECK(fourth_moment_exact_rademacher({1.0}) == 1.0);
  CHECK(fourth_moment_exact_rademacher({1.0, 1.0}) == 8.0);
  CHECK(fourth_moment_exact_rademacher({3.0, 4.0}) == 1201.0);
  CHECK(fourth_moment_rademacher_formula({3.0, 4.0}) == 1201.0);
  CHECK(fourth_moment_exact_rademacher({}) == 0.0);
  CHECK_THROWS_AS(fourth_moment_exact_rademacher(std::vector<double>(21, 1.0)), SizeError);

  std::mt19937_64 g(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> a(std::size_t(1 + i % 14));
    for (auto& x : a) x = u(g);
    const double exact = fourth_moment_exact_rademacher(a);
    CHECK(exact == doctest::Approx(fourth_moment_rademacher_formula(a)).epsilon(1e-12));
    CHECK(exact == doctest::Approx(oracle::rademacher_fourth(a)).epsilon(1e-12));
    double s2 = 0.0;
    for (double x : a) s2 += x * x;
    CHECK(exact <= 3.0 * s2 * s2);
    // scale equivariance
    std::vector<double> b(a);
    for (auto& x : b) x *= 1.5;
    CHECK(fourth_moment_exact_rademacher(b) == doctest::Approx(std::pow(1.5, 4) * exact).epsilon(1e-12));
  }
}

TEST_CASE("Monte Carlo fourth moments") {
  const MonteCarloEstimate z = fourth_moment_mc({0.0, 0.0}, {Distribution::gaussian, true}, 1000, {1, 1});
  CHECK(z.estimate == 0.0);
  std::vector<double> a(12);
  std::vector<cplx> ac(12);
  for (std::size_t i = 0; i < 12; ++i) ac[i] = a[i] = std::sin(double(i) + 1.0);
  const MonteCarloEstimate r = fourth_moment_mc(ac, {Distribution::rademacher, true}, 20000, {2, 2});
  CHECK(std::abs(r.estimate - fourth_moment_exact_rademacher(a)) <= 4.0 * r.stderr_);
  const MonteCarloEstimate one = fourth_moment_mc({1.0}, {Distribution::gaussian, true}, 50000, {3, 3});
  CHECK(std::abs(one.estimate - 1.0) <= 4.0 * one.stderr_);
  CHECK(one.bound == 3.0);
  CHECK(one.trials == 50000);
  CHECK_THROWS_AS(fourth_moment_mc({1.0}, {Distribution::gaussian, false}, 1000, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(fourth_moment_mc({1.0}, {Distribution::gaussian, true}, 999, {1, 1}), PreconditionError);
  const MonteCarloEstimate again = fourth_moment_mc({1.0}, {Distribution::gaussian, true}, 50000, {3, 3});
  CHECK(again.estimate == one.estimate);
}

TEST_CASE("quartiles") {
  const Quartiles q = quartiles({4.0, 1.0, 3.0, 2.0});
  CHECK(q.q25 == 1.75);
  CHECK(q.median == 2.5);
  CHECK(q.q75 == 3.25);
  const Quartiles s = quartiles({7.0});
  CHECK(s.q25 == 7.0);
  CHECK(s.q75 == 7.0);
}

TEST_CASE("random tail experiment") {
  const TailContrast z =
      random_tail_experiment(SymbolSeq::explicit_list({}), {Distribution::rademacher, true}, 3, {0, 8}, 32, {1, 1});
  for (const auto& row : z.rows) {
    CHECK(row.randomized.median == 0.0);
    CHECK(row.deterministic == 0.0);
  }
  const SymbolSeq base = SymbolSeq::powerlog(1.0, 1.0);
  const TailContrast a = random_tail_experiment(base, {Distribution::rademacher, true}, 4, {0, 8, 32, 64}, 128, {9, 9});
  const TailContrast b = random_tail_experiment(base, {Distribution::rademacher, true}, 4, {0, 8, 32, 64}, 128, {9, 9});
  CHECK(a.replica_norms == b.replica_norms);
  for (const auto& rep : a.replica_norms)
    for (std::size_t i = 1; i < rep.size(); ++i) CHECK(rep[i] <= rep[i - 1] * (1 + 1e-8));
  CHECK(a.membership_upper > 0.0);
  try {
    random_tail_experiment(SymbolSeq::hilbert(), {Distribution::rademacher, true}, 2, {4}, 16, {1, 1});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "requires h_λ ∈ 𝒟, membership bracket infinite");
  }
}
