#include "dhankel/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "dhankel/errors.hpp"
#include "dhankel/quadrature.hpp"

namespace dhankel {

double PowerLogDensity::operator()(double t) const {
  if (t <= 0.0 && kappa > 0.0) return 0.0;
  const double s = 1.0 - t;
  double w = c * std::pow(s, gamma);
  if (kappa != 0.0) w *= std::pow(t, kappa);
  if (delta != 0.0) w *= std::pow(1.0 - std::log(s), -delta);
  return w;
}

MeasureSpec::MeasureSpec(std::vector<Atom> atoms, std::vector<PowerLogDensity> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  for (const auto& a : atoms_) {
    if (!(a.location >= 0.0 && a.location < 1.0))
      throw PreconditionError("measure atom at " + std::to_string(a.location) +
                              " is outside [0,1); measures must live on [0,1)");
    if (!(a.mass > 0.0)) throw PreconditionError("measure atom mass must be positive");
  }
  for (const auto& d : densities_) {
    if (!(d.gamma > -1.0)) throw PreconditionError("density gamma must exceed -1 for integrability");
    if (!(d.c > 0.0)) throw PreconditionError("density coefficient c must be positive");
    if (!(d.kappa >= 0.0)) throw PreconditionError("density kappa must be nonnegative");
    if (!std::isfinite(d.delta)) throw PreconditionError("density delta must be finite");
  }
}

MeasureSpec MeasureSpec::lebesgue() { return MeasureSpec({}, {PowerLogDensity{1.0, 0.0, 0.0, 0.0}}); }

MeasureSpec MeasureSpec::point_mass(double location, double mass) { return MeasureSpec({{location, mass}}, {}); }

MeasureSpec MeasureSpec::mixture(const MeasureSpec& a, double wa, const MeasureSpec& b, double wb) {
  std::vector<Atom> atoms;
  std::vector<PowerLogDensity> dens;
  auto add = [&](const MeasureSpec& m, double w) {
    if (w == 0.0) return;
    for (auto at : m.atoms_) atoms.push_back({at.location, at.mass * w});
    for (auto d : m.densities_) {
      d.c *= w;
      dens.push_back(d);
    }
  };
  add(a, wa);
  add(b, wb);
  return MeasureSpec(std::move(atoms), std::move(dens));
}

double MeasureSpec::support_sup() const noexcept {
  if (!densities_.empty()) return 1.0;
  double s = 0.0;
  for (const auto& a : atoms_) s = std::max(s, a.location);
  return s;
}

double MeasureSpec::total_mass() const { return moment(*this, 0); }

namespace {

// c * B(n + kappa + 1, gamma + 1)
double beta_moment(const PowerLogDensity& d, double n) {
  const double x = n + d.kappa + 1.0;
  const double y = d.gamma + 1.0;
  if (d.gamma == 0.0) return d.c / x;
  return d.c * boost::math::tgamma(y) * boost::math::tgamma_delta_ratio(x, y);
}

double density_moment_quadrature(const PowerLogDensity& d, double n) {
  const double power = n + d.kappa;
  if (d.gamma < 0.0) {
    // u = (1-t)^{gamma+1}: (1-t)^gamma dt = du / (gamma+1), smooth in u
    const double g1 = d.gamma + 1.0;
    auto f = [&](double u) {
      if (u <= 0.0) return 0.0;
      const double s = std::pow(u, 1.0 / g1);
      const double t = 1.0 - s;
      double v = d.c / g1;
      if (power != 0.0) v *= std::pow(t, power);
      if (d.delta != 0.0) v *= std::pow(1.0 - std::log(s), -d.delta);
      return v;
    };
    return quad::integrate(f, 0.0, 1.0, 1e-13).value;
  }
  auto f = [&](double t) {
    double v = d(t);
    if (n != 0.0) v *= std::pow(t, n);
    return v;
  };
  return quad::integrate(f, 0.0, 1.0, 1e-13).value;
}

}  // namespace

double moment(const MeasureSpec& spec, std::size_t n, MomentMethod method) {
  const double nd = static_cast<double>(n);
  double total = 0.0;
  for (const auto& a : spec.atoms()) total += a.mass * (n == 0 ? 1.0 : std::pow(a.location, nd));
  for (const auto& d : spec.densities()) {
    if (method == MomentMethod::automatic && d.delta == 0.0)
      total += beta_moment(d, nd);
    else
      total += density_moment_quadrature(d, nd);
  }
  return total;
}

std::vector<double> moments(const MeasureSpec& spec, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = moment(spec, n);
  return out;
}

}  // namespace dhankel
