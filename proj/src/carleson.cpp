#include "dhankel/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dhankel/errors.hpp"
#include "dhankel/quadrature.hpp"
#include "dhankel/rng.hpp"
#include "dhankel/summation.hpp"

namespace dhankel {

std::vector<double> CarlesonConfig::default_delta_grid() {
  std::vector<double> g;
  for (int p = 3; p <= 8; ++p) g.push_back(std::ldexp(1.0, -p));
  return g;
}

namespace {

std::vector<cplx> derivative_coeffs(const TaylorPoly& b) {
  std::vector<cplx> c;
  for (std::size_t a = 1; a <= b.degree(); ++a) c.push_back(static_cast<double>(a) * b[a]);
  return c;
}

// Entry (j,k) of sum_{a - e = k - j} c_a conj(c_e) f(j + a + 1) for k >= j; the rest by conjugate symmetry.
template <class F>
GramMatrix convolution_gram(const TaylorPoly& b, std::size_t n, F factor) {
  const auto c = derivative_coeffs(b);
  const std::size_t dim = n + 1;
  GramMatrix g;
  g.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::size_t len = c.size();
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = j; k < dim; ++k) {
      const std::size_t d = k - j;
      if (d >= len) break;
      cplx acc = 0.0;
      for (std::size_t a = d; a < len; ++a) acc += c[a] * std::conj(c[a - d]) * factor(static_cast<double>(j + a + 1));
      const auto jj = static_cast<Eigen::Index>(j), kk = static_cast<Eigen::Index>(k);
      g.entries(jj, kk) = acc;
      g.entries(kk, jj) = std::conj(acc);
    }
    g.entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)).imag(0.0);
  }
  return g;
}

Eigen::VectorXd inv_sqrt_dirichlet(std::size_t n) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) d(static_cast<Eigen::Index>(j)) = j == 0 ? 1.0 : 1.0 / std::sqrt(double(j));
  return d;
}

double scaled_top(const GramMatrix& g, std::size_t n) {
  const Eigen::VectorXd s = inv_sqrt_dirichlet(n);
  const Eigen::MatrixXcd m = s.asDiagonal() * g.entries * s.asDiagonal();
  return top_eigenvalue_psd(m).value;
}

template <class Mat>
EigenEstimate power_psd(const Mat& m, double tol, int max_iter) {
  using Vec = Eigen::Matrix<typename Mat::Scalar, Eigen::Dynamic, 1>;
  EigenEstimate est;
  const Eigen::Index dim = m.rows();
  if (dim == 0 || m.cwiseAbs().maxCoeff() == 0.0) {
    est.converged = true;
    return est;
  }
  const RngSpec spec{0xCA71E5u, 0x6A4Du};
  Vec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = 0.5 + uniform01(spec, static_cast<std::uint64_t>(i));
  v.normalize();
  double prev = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    Vec w = m * v;
    const double rq = std::real(v.dot(w));
    est.iterations = it;
    est.value = rq;
    const double nw = w.norm();
    if (nw == 0.0) {
      est.converged = true;
      break;
    }
    v = w / nw;
    if (it > 1 && std::abs(rq - prev) <= tol * std::abs(rq)) {
      est.converged = true;
      break;
    }
    prev = rq;
  }
  return est;
}

}  // namespace

GramMatrix symbol_gram(const TaylorPoly& b, std::size_t n) {
  return convolution_gram(b, n, [](double p) { return 1.0 / p; });
}

GramMatrix annulus_gram(const TaylorPoly& b, std::size_t n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("annulus_gram: delta must lie in (0,1)");
  const double l = std::log1p(-delta);
  return convolution_gram(b, n, [l](double p) { return -std::expm1(2.0 * p * l) / p; });
}

EigenEstimate top_eigenvalue_psd(const Eigen::MatrixXcd& m, double tol, int max_iter) {
  if (m.rows() != m.cols()) throw PreconditionError("top_eigenvalue_psd: matrix must be square");
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd r = m.real();
    return power_psd(r, tol, max_iter);
  }
  return power_psd(m, tol, max_iter);
}

double finite_test_carleson_norm(const TaylorPoly& b, std::size_t n) { return scaled_top(symbol_gram(b, n), n); }

double x_norm(const TaylorPoly& b, std::size_t n) { return std::norm(b[0]) + finite_test_carleson_norm(b, n); }

double restricted_carleson_norm(const TaylorPoly& b, std::size_t n, double delta) {
  return scaled_top(annulus_gram(b, n, delta), n);
}

double mixed_norm(const TaylorPoly& phi, double p, std::size_t radial_nodes, std::size_t angular_nodes) {
  if (!(p > 2.0)) throw DomainError("mixed_norm: requires p > 2");
  if (radial_nodes == 0 || angular_nodes == 0) throw PreconditionError("mixed_norm: node counts must be positive");
  const TaylorPoly d = phi.derivative();
  const auto rule = quad::gauss_legendre(radial_nodes, 0.0, 1.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(angular_nodes);
  const bool sup = std::isinf(p);
  std::vector<double> radial(radial_nodes);
  for (std::size_t i = 0; i < radial_nodes; ++i) {
    const double r = rule.nodes[i];
    const auto modulus = [&](double theta) { return std::abs(evaluate(d, std::polar(r, theta))); };
    std::vector<double> vals(angular_nodes);
    for (std::size_t k = 0; k < angular_nodes; ++k) vals[k] = modulus(step * static_cast<double>(k));
    double m2 = 0.0;
    if (sup) {
      const auto best = std::max_element(vals.begin(), vals.end()) - vals.begin();
      double lo = step * (static_cast<double>(best) - 1.0), hi = step * (static_cast<double>(best) + 1.0);
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
      double f1 = modulus(x1), f2 = modulus(x2);
      for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + g * (hi - lo);
          f2 = modulus(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - g * (hi - lo);
          f1 = modulus(x1);
        }
      }
      const double mx = std::max({vals[static_cast<std::size_t>(best)], f1, f2});
      m2 = mx * mx;
    } else {
      const double mean =
          pairwise_accumulate(0, angular_nodes, [&](std::size_t k) { return std::pow(vals[k], p); }) /
          static_cast<double>(angular_nodes);
      m2 = std::pow(mean, 2.0 / p);
    }
    radial[i] = rule.weights[i] * m2;
  }
  return pairwise_sum(std::span<const double>(radial));
}

ClassReport classify_hankel_general(const TaylorPoly& b, const std::vector<std::size_t>& n_grid,
                                    const CarlesonConfig& cfg) {
  if (n_grid.size() < 2) throw PreconditionError("classify_hankel_general: N grid needs at least two points");
  for (std::size_t i = 1; i < n_grid.size(); ++i)
    if (n_grid[i] <= n_grid[i - 1])
      throw PreconditionError("classify_hankel_general: N grid must be strictly increasing");
  ClassReport rep;
  rep.applicability = Applicability::heuristic;
  rep.n_max = n_grid.back();
  rep.reference_x = static_cast<double>(n_grid.front());
  rep.last_x = static_cast<double>(n_grid.back());

  bool trivial = true;
  for (std::size_t k = 1; k <= b.degree(); ++k)
    if (b[k] != cplx{0.0}) trivial = false;
  if (trivial) {
    for (const std::size_t n : n_grid) rep.profile.push_back({static_cast<double>(n), 0.0, 0.0, false});
    rep.verdict = Verdict::compact;
    rep.notes = "symbol derivative vanishes: zero operator.";
    return rep;
  }

  std::vector<double> f;
  for (const std::size_t n : n_grid) {
    const double v = finite_test_carleson_norm(b.resized(n), n);
    f.push_back(v);
    rep.profile.push_back({static_cast<double>(n), v, v, false});
  }
  const double growth = f.back() / f.front();
  const double step = f.back() / f[f.size() - 2];
  rep.decay_ratio = growth;
  std::ostringstream notes;
  notes << "finite-test Carleson norms are lower bounds for the Carleson constant; growth last/first = " << growth
        << ", last/previous = " << step << ". ";

  if (growth >= cfg.growth_ratio) {
    rep.verdict = Verdict::unbounded;
    notes << "norm keeps growing with N.";
  } else if (step <= 1.0 + cfg.saturation_band) {
    for (const std::size_t n : n_grid) {
      const TaylorPoly bn = b.resized(n);
      const double full = finite_test_carleson_norm(bn, n);
      for (const double delta : cfg.delta_grid)
        rep.vanishing.push_back({n, delta, full > 0.0 ? restricted_carleson_norm(bn, n, delta) / full : 0.0});
    }
    const double finest = *std::min_element(cfg.delta_grid.begin(), cfg.delta_grid.end());
    double frac = 1.0;
    for (const auto& c : rep.vanishing)
      if (c.n == n_grid.back() && c.delta == finest) frac = c.fraction;
    if (frac <= cfg.vanish_fraction) {
      rep.verdict = Verdict::compact;
      notes << "norm saturates and the annulus-restricted norm vanishes (fraction " << frac << ").";
    } else {
      rep.verdict = Verdict::bounded;
      notes << "norm saturates; annulus-restricted fraction " << frac << " does not vanish.";
    }
  } else {
    rep.verdict = Verdict::inconclusive;
    notes << "neither growth nor saturation.";
  }
  rep.notes = notes.str();
  return rep;
}

TaylorPoly conjugate_symbol_poly(const SymbolSeq& s, std::size_t degree) {
  auto v = s.values(degree + 1);
  for (auto& c : v) c = std::conj(c);
  return TaylorPoly(std::move(v));
}

}  // namespace dhankel
