#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "dhankel/coeffspace.hpp"
#include "dhankel/criteria.hpp"

namespace dhankel {

/// G_{jk} = int z^j conj(z)^k |b'(z)|^2 dA(z), j,k = 0..N.
struct GramMatrix {
  Eigen::MatrixXcd entries;
  bool exact = true;
};

/// Exact convolution formula G_{jk} = sum_{a - e = k - j} c_a conj(c_e) / (j + a + 1),
/// c the coefficients of b'.
GramMatrix symbol_gram(const TaylorPoly& b, std::size_t n);

/// Gram matrix restricted to the annulus 1 - delta <= |z| < 1.
GramMatrix annulus_gram(const TaylorPoly& b, std::size_t n, double delta);

struct EigenEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest eigenvalue of a Hermitian positive semidefinite matrix by power iteration.
EigenEstimate top_eigenvalue_psd(const Eigen::MatrixXcd& m, double tol = 1e-12, int max_iter = 20000);

/// Largest generalized Rayleigh quotient of G against diag(1, 1, 2, ..., N):
/// the squared Carleson constant of |b'|^2 dA over test polynomials of degree <= N.
double finite_test_carleson_norm(const TaylorPoly& b, std::size_t n);

/// |b(0)|^2 + finite_test_carleson_norm(b, n).
double x_norm(const TaylorPoly& b, std::size_t n);

/// Same quotient with the annulus Gram matrix; 0 < delta < 1.
double restricted_carleson_norm(const TaylorPoly& b, std::size_t n, double delta);

/// int_0^1 M_p(phi', r)^2 dr with Gauss-Legendre in r and the trapezoid rule in
/// theta. p must exceed 2; p = +inf uses the angular maximum refined by a
/// golden-section search around the best node.
double mixed_norm(const TaylorPoly& phi, double p, std::size_t radial_nodes = 64, std::size_t angular_nodes = 256);

struct CarlesonConfig {
  double growth_ratio = 1.2;      ///< last/first finite-test norm ratio that signals unboundedness
  double saturation_band = 0.15;  ///< last/previous ratio below 1 + band counts as saturated
  double vanish_fraction = 0.1;   ///< restricted/full at the finest cell that counts as vanishing
  std::vector<double> delta_grid = default_delta_grid();

  static std::vector<double> default_delta_grid();  ///< 2^-3 .. 2^-8
};

/// Heuristic verdict for the Hankel operator with symbol coefficients
/// lambda_n = conj(b_n): growth or saturation of the finite-test Carleson
/// norm of b truncated to each N in n_grid, then the annulus vanishing sweep.
ClassReport classify_hankel_general(const TaylorPoly& b, const std::vector<std::size_t>& n_grid,
                                    const CarlesonConfig& cfg = {});

/// Truncation of h_{conj(lambda)}: coefficients conj(lambda_0..lambda_n).
TaylorPoly conjugate_symbol_poly(const SymbolSeq& s, std::size_t degree);

}  // namespace dhankel
