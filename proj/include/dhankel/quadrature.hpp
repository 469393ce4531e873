#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dhankel::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b] (Newton iteration on P_n).
Rule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
  bool converged = true;
};

/// Adaptive Gauss-Legendre panels on [a, b]: a panel is accepted when the
/// 20-point rule on it agrees with the sum over its two halves to within the
/// panel's share of abs_tol.
AdaptiveResult integrate(const std::function<double(double)>& f, double a, double b,
                         double abs_tol = 1e-12, int max_depth = 48);

}  // namespace dhankel::quad
