#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "dhankel/operators.hpp"
#include "dhankel/symbol.hpp"

namespace dhankel {

/// How the part of a tail sum beyond the summed range was bracketed.
enum class RemainderPolicy {
  exact,                ///< finite support, nothing left over
  integral_comparison,  ///< power-log symbols
  geometric,            ///< moments of measures with support inside [0, rho], rho < 1
  bounded_multiplier,   ///< randomized symbol with |X| <= M over a bracketed base
  unknown               ///< no certified bound; upper = +inf
};

std::string_view to_string(RemainderPolicy p) noexcept;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Bracket [lower, upper] of a weighted tail sum.
struct TailBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool divergent = false;  ///< certified divergence (upper = +inf)
  RemainderPolicy policy = RemainderPolicy::exact;

  double mid() const noexcept;
  double width() const noexcept { return upper - lower; }
  bool finite() const noexcept { return upper < kInf; }
};

/// Bracket of S(m) = sum_{n >= m} n |lambda_n|^2.
struct WidomTail : TailBracket {
  std::size_t m = 0;
};

/// Partial sum over n = m..n_max plus a bracket for the remainder.
WidomTail widom_tail(const SymbolSeq& s, std::size_t m, std::size_t n_max);

struct ProfilePoint {
  double x = 0.0;  ///< m (Widom) or N (Carleson sweeps)
  double lower = 0.0;
  double upper = 0.0;
  bool divergent = false;

  double mid() const noexcept;
};

/// Brackets of S(m) * log(m+2) for m in m_grid (strictly increasing).
std::vector<ProfilePoint> widom_profile(const SymbolSeq& s, const std::vector<std::size_t>& m_grid,
                                        std::size_t n_max);

enum class Verdict { unbounded, bounded, compact, inconclusive };
enum class Applicability { theorem_exact, heuristic };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Applicability a) noexcept;

struct ClassifyConfig {
  double plateau_band = 0.15;    ///< delta_b
  double compact_factor = 0.5;   ///< delta_c
  double max_rel_width = 0.05;   ///< brackets wider than this (relative) cannot certify bounded/compact
  std::vector<std::size_t> m_grid = default_m_grid();
  std::size_t n_max = 0;         ///< 0: 64 * last grid point

  static std::vector<std::size_t> default_m_grid();  ///< 2^4 .. 2^14
  std::size_t effective_n_max() const;
};

/// One (N, delta) cell of the Carleson vanishing sweep.
struct VanishingCell {
  std::size_t n = 0;
  double delta = 0.0;
  double fraction = 0.0;  ///< restricted norm / full norm
};

struct ClassReport {
  Verdict verdict = Verdict::inconclusive;
  Applicability applicability = Applicability::heuristic;
  std::vector<ProfilePoint> profile;
  std::vector<VanishingCell> vanishing;
  double decay_ratio = 0.0;  ///< profile mid(last) / mid(reference)
  double reference_x = 0.0;
  double last_x = 0.0;
  std::size_t n_max = 0;
  std::string notes;
};

/// Verdict from the Widom profile. The decay ratio compares the last grid
/// point with the point two octaves below it on the log(m+2) scale (the scale
/// on which the condition is stated): divergent tail -> unbounded, ratio within
/// 1 +- plateau_band -> bounded, ratio <= compact_factor -> compact, ratio
/// above the band -> unbounded, anything else inconclusive.
ClassReport classify(const SymbolSeq& s, OperatorKind kind, const ClassifyConfig& cfg = {});

struct RktPoint {
  double t = 0.0;
  double estimate = 0.0;          ///< ||T k_t||_D of the truncated computation
  double kernel_tail = 0.0;       ///< normalized tail bound of the input kernel
  double closed_form = std::numeric_limits<double>::quiet_NaN();  ///< Cesaro only
  double closed_form_tail = std::numeric_limits<double>::quiet_NaN();  ///< bound on the missing norm^2
  std::size_t input_degree = 0;
  std::size_t output_degree = 0;
  bool output_controlled = false;  ///< false for Hankel: no bound on the discarded output tail
};

struct RktProbe {
  std::vector<RktPoint> points;
  double statistic = 0.0;  ///< max estimate over the grid
  std::string notes;
};

/// Applies the operator to k_t truncated at N(t) = min(n, degree where the
/// kernel tail drops below kernel_tol) and takes the dirichlet-exact norm of
/// the output truncated at degree n.
RktProbe rkt_probe(const SymbolSeq& s, OperatorKind kind, const std::vector<double>& t_grid, std::size_t n,
                   double kernel_tol = 1e-12);

/// Upper bound on the part of ||C_eta k_t||_D^2 missing from cesaro_rkt_norm(s, t, n).
double cesaro_rkt_tail_bound(const SymbolSeq& s, double t, std::size_t n);

/// Bracket of sum_{n >= 0} (n+1) |lambda_n|^2 (h_lambda in the Dirichlet space).
TailBracket dirichlet_membership(const SymbolSeq& s, std::size_t n_max);

struct DoubleSum {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// lhs = sum_{m,n>=1} a_n a_m / log(n+m+1), rhs = sum_{n>=1} n a_n^2. a[0] is ignored.
DoubleSum double_sum_ratio(const std::vector<double>& a);

}  // namespace dhankel
