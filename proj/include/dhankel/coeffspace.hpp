#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace dhankel {

using cplx = std::complex<double>;

/// Truncated power series a_0 + a_1 z + ... + a_N z^N.
///
/// The degree is a storage bound: the trailing coefficient may be zero.
/// There is always at least one coefficient.
class TaylorPoly {
 public:
  TaylorPoly() : coeffs_(1, cplx{0.0}) {}
  explicit TaylorPoly(std::vector<cplx> coeffs);
  TaylorPoly(std::initializer_list<cplx> coeffs) : TaylorPoly(std::vector<cplx>(coeffs)) {}

  static TaylorPoly zero(std::size_t degree) { return TaylorPoly(std::vector<cplx>(degree + 1)); }
  static TaylorPoly monomial(std::size_t k, cplx coeff = 1.0);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }

  cplx& operator[](std::size_t n) { return coeffs_[n]; }
  const cplx& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Coefficient n, or zero beyond the stored degree.
  cplx coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : cplx{0.0}; }

  /// Copy truncated (or zero-padded) to the given degree.
  TaylorPoly resized(std::size_t degree) const;

  /// Coefficients of f'.
  TaylorPoly derivative() const;

  bool is_zero() const noexcept;

  friend bool operator==(const TaylorPoly&, const TaylorPoly&) = default;

 private:
  std::vector<cplx> coeffs_;
};

/// Coefficient weight conventions.
///  - dirichlet_exact:   d_0 = 1, d_n = n   (|f(0)|^2 + int |f'|^2 dA)
///  - dirichlet_section: s_n = n + 1        (basis (n+1)^{-1/2} z^n)
///  - bergman:           v_n = 1 / (n + 1)
enum class SpaceTag { dirichlet_exact, dirichlet_section, bergman };

std::string_view to_string(SpaceTag t) noexcept;

double space_weight(SpaceTag tag, std::size_t n) noexcept;

/// sqrt(sum w_n |a_n|^2).
double space_norm(const TaylorPoly& p, SpaceTag tag);

/// a_0 conj(b_0) + sum_{n>=1} n a_n conj(b_n).
cplx dirichlet_inner(const TaylorPoly& p, const TaylorPoly& q);

/// Horner evaluation; throws DomainError unless |z| < 1.
cplx evaluate(const TaylorPoly& p, cplx z);

/// Truncation of K_w(z) = 1 + log(1 / (1 - z conj(w))) to degree N.
TaylorPoly kernel_coeffs(cplx w, std::size_t degree);

struct NormalizedKernel {
  TaylorPoly kernel;     ///< k_t truncated to degree N
  double tail_bound;     ///< upper bound on sum_{n>N} t^{2n}/n (unnormalized Dirichlet norm^2 of the tail)
  double normalizer;     ///< (1 + log(1/(1-t^2)))^{-1}
};

/// Normalized kernel k_t for real t in [0,1), truncated to degree N.
NormalizedKernel normalized_kernel_coeffs(double t, std::size_t degree);

/// Geometric bound t^{2N+2} / ((N+1)(1-t^2)) on the discarded kernel tail at degree N.
double kernel_tail_bound(double t, std::size_t degree);

/// Smallest N with kernel_tail_bound(t, N) < tol.
std::size_t kernel_degree_for_tail(double t, double tol);

}  // namespace dhankel
