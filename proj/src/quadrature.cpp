#include "dhankel/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "dhankel/errors.hpp"

namespace dhankel::quad {

Rule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double centre = 0.5 * (b + a);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    if (n == 1) p0 = 1.0;
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = centre - half * x;
    r.nodes[n - 1 - i] = centre + half * x;
    r.weights[i] = half * w;
    r.weights[n - 1 - i] = half * w;
  }
  return r;
}

namespace {

const Rule& unit_rule() {
  static const Rule rule = gauss_legendre(20, 0.0, 1.0);
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = unit_rule();
  const double h = b - a;
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(a + h * r.nodes[i]);
  return s * h;
}

void refine(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth,
            AdaptiveResult& out) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid);
  const double right = panel(f, mid, b);
  const double err = std::abs(left + right - whole);
  if (err <= tol || depth <= 0 || mid <= a || mid >= b) {
    if (err > tol) out.converged = false;
    out.value += left + right;
    out.error_estimate += err;
    out.panels += 2;
    return;
  }
  refine(f, a, mid, left, 0.5 * tol, depth - 1, out);
  refine(f, mid, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

AdaptiveResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol, int max_depth) {
  AdaptiveResult out;
  if (a == b) return out;
  refine(f, a, b, panel(f, a, b), abs_tol, max_depth, out);
  return out;
}

}  // namespace dhankel::quad
