#pragma once

#include <cstddef>
#include <vector>

namespace dhankel {

struct Atom {
  double location = 0.0;  ///< in [0, 1)
  double mass = 0.0;      ///< > 0
};

/// Density c * t^kappa * (1-t)^gamma * (log(e/(1-t)))^{-delta} dt on [0,1),
/// gamma > -1, kappa >= 0.
struct PowerLogDensity {
  double c = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  double kappa = 0.0;

  double operator()(double t) const;
};

/// Finite positive Borel measure on [0,1): atoms plus power-log densities.
/// An empty spec is the zero measure.
class MeasureSpec {
 public:
  MeasureSpec() = default;
  /// Validates the components; throws PreconditionError on atoms at or beyond 1,
  /// non-positive masses, gamma <= -1, negative kappa or non-positive c.
  MeasureSpec(std::vector<Atom> atoms, std::vector<PowerLogDensity> densities);

  static MeasureSpec lebesgue();
  static MeasureSpec point_mass(double location, double mass = 1.0);

  /// Mass-weighted sum of two measures.
  static MeasureSpec mixture(const MeasureSpec& a, double wa, const MeasureSpec& b, double wb);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<PowerLogDensity>& densities() const noexcept { return densities_; }

  bool is_zero() const noexcept { return atoms_.empty() && densities_.empty(); }

  /// Supremum of the support: 1 as soon as a density is present.
  double support_sup() const noexcept;

  double total_mass() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<PowerLogDensity> densities_;
};

enum class MomentMethod { automatic, quadrature };

/// mu_n = int t^n dmu(t). Closed forms for atoms and delta = 0 densities
/// (c * B(n+kappa+1, gamma+1)); adaptive quadrature otherwise, or everywhere
/// with MomentMethod::quadrature.
double moment(const MeasureSpec& spec, std::size_t n, MomentMethod method = MomentMethod::automatic);

/// mu_0 .. mu_{count-1}.
std::vector<double> moments(const MeasureSpec& spec, std::size_t count);

}  // namespace dhankel
