#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "dhankel/coeffspace.hpp"
#include "dhankel/symbol.hpp"

namespace dhankel {

enum class OperatorKind { hankel, cesaro, bilinear };

std::string_view to_string(OperatorKind k) noexcept;
OperatorKind operator_kind_from_string(std::string_view name);

/// Weighted finite section of an operator matrix. `first` is the index of row
/// and column 0 (non-zero for tail sections).
struct SectionMatrix {
  Eigen::MatrixXcd entries;
  SpaceTag weight = SpaceTag::dirichlet_section;
  OperatorKind kind = OperatorKind::hankel;
  std::size_t first = 0;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// b_n = sum_{k <= min(n_inner, deg f)} lambda_{n+k} a_k for n = 0..n_out.
/// Requires n_inner >= deg f (truncate f first for series inputs).
TaylorPoly hankel_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out, std::size_t n_inner);
TaylorPoly hankel_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out);

/// c_n = eta_n * (a_0 + ... + a_min(n, deg f)) for n = 0..n_out.
TaylorPoly cesaro_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out);

/// N x N section in the dirichlet-section or bergman weighting:
///   hankel    A_{jk} = sqrt(w_k / w_j) lambda_{j+k}    (w the weight sequence)
///   cesaro    C_{jk} = sqrt(w_k / w_j) eta_j, k <= j
///   bilinear  (j+k) / sqrt((j+1)(k+1)) conj(b_{j+k})   (dirichlet-section only)
/// dirichlet_exact is rejected: d_0 = d_1 breaks the Bergman transpose identity.
SectionMatrix section_matrix(const SymbolSeq& s, OperatorKind kind, SpaceTag tag, std::size_t n);

/// Rows and columns first..n-1 of the N x N section.
SectionMatrix section_block(const SymbolSeq& s, OperatorKind kind, SpaceTag tag, std::size_t first, std::size_t n);

struct SingularValue {
  double sigma = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// 50 * log2(N) + 200.
int default_max_iterations(std::size_t n) noexcept;

/// Largest singular value by power iteration on v -> M^H (M v) from a fixed
/// seeded start vector. Converged when successive Rayleigh quotients differ
/// relatively by less than tol. max_iter <= 0 selects default_max_iterations.
SingularValue top_singular_value(const SectionMatrix& m, double tol = 1e-10, int max_iter = 0);
SingularValue top_singular_value(const Eigen::MatrixXcd& m, double tol = 1e-10, int max_iter = 0);
SingularValue top_singular_value(const Eigen::MatrixXd& m, double tol = 1e-10, int max_iter = 0);

/// Top singular value of the section restricted to indices >= m (dirichlet-section weights).
SingularValue tail_section_norm(const SymbolSeq& s, OperatorKind kind, std::size_t m, std::size_t n,
                                double tol = 1e-10, int max_iter = 0);

/// ||C_eta k_t||_D from the closed form
///   (1 + log(1/(1-t^2)))^{-1} (|eta_0|^2 + sum_{n>=0} (n+1)|eta_{n+1}|^2 (1 + sum_{k<=n+1} t^k/k)^2),
/// summed over coefficients eta_0..eta_N (the same coefficients cesaro_apply
/// produces with n_out = N).
double cesaro_rkt_norm(const SymbolSeq& s, double t, std::size_t n);

}  // namespace dhankel
