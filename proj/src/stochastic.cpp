#include "dhankel/stochastic.hpp"

#include <algorithm>
#include <cmath>

#include "dhankel/criteria.hpp"
#include "dhankel/errors.hpp"
#include "dhankel/summation.hpp"

namespace dhankel {

SymbolSeq sample_symbol(const SymbolSeq& s, const DistTag& dist, const RngSpec& rng, std::size_t n) {
  const auto base = s.values(n + 1);
  std::vector<cplx> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = draw(dist, rng, k) * std::conj(base[k]);
  return SymbolSeq::explicit_list(std::move(out));
}

double fourth_moment_exact_rademacher(const std::vector<double>& a) {
  if (a.size() > 20) throw SizeError("fourth_moment_exact_rademacher: at most 20 amplitudes");
  const std::size_t patterns = std::size_t{1} << a.size();
  const double total = pairwise_accumulate(0, patterns, [&](std::size_t mask) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (mask >> i) & 1u ? -a[i] : a[i];
    const double s2 = s * s;
    return s2 * s2;
  });
  return total / static_cast<double>(patterns);
}

double fourth_moment_rademacher_formula(const std::vector<double>& a) {
  const double s2 = pairwise_accumulate(0, a.size(), [&](std::size_t i) { return a[i] * a[i]; });
  const double s4 = pairwise_accumulate(0, a.size(), [&](std::size_t i) { return a[i] * a[i] * a[i] * a[i]; });
  return 3.0 * s2 * s2 - 2.0 * s4;
}

MonteCarloEstimate fourth_moment_mc(const std::vector<cplx>& a, const DistTag& dist, std::size_t trials,
                                    const RngSpec& rng) {
  if (!dist.fourth_moment_normalized) throw PreconditionError("fourth_moment_mc: requires E[X^4] = 1 (normalized law)");
  if (trials < 1000) throw PreconditionError("fourth_moment_mc: requires at least 1000 trials");
  MonteCarloEstimate est;
  est.trials = trials;
  const double s2 = pairwise_accumulate(0, a.size(), [&](std::size_t i) { return std::norm(a[i]); });
  est.bound = 3.0 * s2 * s2;
  if (a.empty()) return est;
  const std::uint64_t n = a.size();
  double mean = 0.0, m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * draw(dist, rng, t * n + i);
    const double v = std::norm(s) * std::norm(s);
    const double d = v - mean;
    mean += d / static_cast<double>(t + 1);
    m2 += d * (v - mean);
  }
  est.estimate = mean;
  est.stderr_ = std::sqrt(m2 / static_cast<double>(trials - 1) / static_cast<double>(trials));
  return est;
}

Quartiles quartiles(std::vector<double> xs) {
  if (xs.empty()) return {};
  std::sort(xs.begin(), xs.end());
  const auto q = [&](double p) {
    const double h = p * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    return xs[lo] + (h - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
  };
  return {q(0.25), q(0.5), q(0.75)};
}

TailContrast random_tail_experiment(const SymbolSeq& s, const DistTag& dist, std::size_t replicas,
                                    const std::vector<std::size_t>& m_grid, std::size_t n, const RngSpec& rng) {
  const TailBracket member = dirichlet_membership(s, n);
  if (!member.finite()) throw PreconditionError("requires h_λ ∈ 𝒟, membership bracket infinite");
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    if (m_grid[i] >= n) throw PreconditionError("random_tail_experiment: every m must be below N");
    if (i > 0 && m_grid[i] <= m_grid[i - 1])
      throw PreconditionError("random_tail_experiment: m grid must be strictly increasing");
  }
  TailContrast out;
  out.membership_upper = member.upper;
  out.replica_norms.assign(replicas, std::vector<double>(m_grid.size(), 0.0));
  std::vector<std::vector<bool>> converged(replicas, std::vector<bool>(m_grid.size(), true));
  for (std::size_t r = 0; r < replicas; ++r) {
    const SymbolSeq w = SymbolSeq::randomized(s, dist, rng.child(r));
    for (std::size_t i = 0; i < m_grid.size(); ++i) {
      const SingularValue sv = tail_section_norm(w, OperatorKind::hankel, m_grid[i], n);
      out.replica_norms[r][i] = sv.sigma;
      converged[r][i] = sv.converged;
    }
  }
  for (std::size_t i = 0; i < m_grid.size(); ++i) {
    TailContrastRow row;
    row.m = m_grid[i];
    std::vector<double> col(replicas);
    for (std::size_t r = 0; r < replicas; ++r) {
      col[r] = out.replica_norms[r][i];
      if (!converged[r][i]) ++row.unconverged;
    }
    row.randomized = quartiles(std::move(col));
    const SingularValue det = tail_section_norm(s, OperatorKind::hankel, m_grid[i], n);
    row.deterministic = det.sigma;
    row.deterministic_converged = det.converged;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace dhankel
