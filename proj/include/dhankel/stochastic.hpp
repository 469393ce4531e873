#pragma once

#include <cstddef>
#include <vector>

#include "dhankel/coeffspace.hpp"
#include "dhankel/operators.hpp"
#include "dhankel/rng.hpp"
#include "dhankel/symbol.hpp"

namespace dhankel {

/// Explicit symbol omega_n = X_n conj(lambda_n), n = 0..n.
SymbolSeq sample_symbol(const SymbolSeq& s, const DistTag& dist, const RngSpec& rng, std::size_t n);

/// E(sum a_i X_i)^4 over all 2^n Rademacher sign patterns. n <= 20.
double fourth_moment_exact_rademacher(const std::vector<double>& a);

/// 3 (sum a^2)^2 - 2 sum a^4.
double fourth_moment_rademacher_formula(const std::vector<double>& a);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  double bound = 0.0;  ///< 3 (sum |a_i|^2)^2
  std::size_t trials = 0;
};

/// Monte Carlo mean of |sum a_i X_i|^4. Requires a fourth-moment-normalized
/// law and trials >= 1000. Trial t uses draws t*n .. t*n + n - 1 of `rng`.
MonteCarloEstimate fourth_moment_mc(const std::vector<cplx>& a, const DistTag& dist, std::size_t trials,
                                    const RngSpec& rng);

struct Quartiles {
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
};

/// Linear-interpolation quantiles (type 7).
Quartiles quartiles(std::vector<double> xs);

struct TailContrastRow {
  std::size_t m = 0;
  Quartiles randomized;
  double deterministic = 0.0;
  std::size_t unconverged = 0;  ///< replicas whose power iteration hit max_iter
  bool deterministic_converged = true;
};

struct TailContrast {
  std::vector<TailContrastRow> rows;
  std::vector<std::vector<double>> replica_norms;  ///< [replica][grid index]
  double membership_upper = 0.0;
};

/// Tail-section norms of `replicas` randomized copies of `s` against the
/// deterministic symbol. Replica r uses rng.child(r). Throws
/// PreconditionError unless the Dirichlet membership bracket of `s` is finite.
TailContrast random_tail_experiment(const SymbolSeq& s, const DistTag& dist, std::size_t replicas,
                                    const std::vector<std::size_t>& m_grid, std::size_t n, const RngSpec& rng);

}  // namespace dhankel
