#include "dhankel/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dhankel/errors.hpp"

namespace dhankel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Monotonicity classify_list(const std::vector<cplx>& v) {
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& c : v) {
    if (c.imag() != 0.0 || c.real() < 0.0 || c.real() > prev) return Monotonicity::general;
    prev = c.real();
  }
  return Monotonicity::decreasing_positive;
}

double powerlog_value(const PowerLogSymbol& p, std::size_t n) {
  const double x = static_cast<double>(n);
  double v = p.scale;
  if (p.alpha != 0.0) v *= std::pow(x + 1.0, -p.alpha);
  if (p.beta != 0.0) v *= std::pow(std::log(x + 2.0), -p.beta);
  return v;
}

double law_value(const LacunaryLaw& l, std::size_t k) {
  return l.scale * std::pow(static_cast<double>(l.q), -l.decay * static_cast<double>(k)) *
         std::pow(static_cast<double>(k) + 1.0, -l.log_power);
}

// k with q^k == n, if any.
std::optional<std::size_t> law_exponent(const LacunaryLaw& l, std::size_t n) {
  std::size_t p = 1;
  for (std::size_t k = 0;; ++k) {
    if (p == n) return k;
    if (p > n / l.q) return std::nullopt;
    p *= l.q;
  }
}

}  // namespace

SymbolSeq SymbolSeq::explicit_list(std::vector<cplx> values) {
  const Monotonicity m = classify_list(values);
  return SymbolSeq(ExplicitSymbol{std::move(values)}, m);
}

SymbolSeq SymbolSeq::explicit_real(const std::vector<double>& values) {
  return explicit_list(std::vector<cplx>(values.begin(), values.end()));
}

SymbolSeq SymbolSeq::powerlog(double alpha, double beta, double scale) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(scale))
    throw PreconditionError("powerlog parameters must be finite");
  const bool mono = scale >= 0.0 && alpha >= 0.0 && beta >= 0.0;
  return SymbolSeq(PowerLogSymbol{alpha, beta, scale}, mono ? Monotonicity::decreasing_positive : Monotonicity::general);
}

SymbolSeq SymbolSeq::moments(MeasureSpec measure) {
  return SymbolSeq(MomentSymbol{std::move(measure)}, Monotonicity::decreasing_positive);
}

SymbolSeq SymbolSeq::lacunary(std::vector<std::size_t> support, std::vector<cplx> values) {
  if (support.size() != values.size())
    throw PreconditionError("lacunary symbol: support and values differ in length");
  double q = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] == 0) throw PreconditionError("lacunary symbol: support indices must be positive");
    if (k > 0) {
      const double r = static_cast<double>(support[k]) / static_cast<double>(support[k - 1]);
      if (!(r > 1.0)) throw PreconditionError("lacunary symbol: support must grow by a ratio q > 1");
      q = std::min(q, r);
    }
  }
  return SymbolSeq(LacunarySymbol{std::move(support), std::move(values), q, std::nullopt}, Monotonicity::general);
}

SymbolSeq SymbolSeq::lacunary_law(LacunaryLaw law) {
  if (law.q < 2) throw PreconditionError("lacunary symbol: ratio q must be at least 2");
  if (!std::isfinite(law.decay) || !std::isfinite(law.log_power) || !std::isfinite(law.scale))
    throw PreconditionError("lacunary symbol: law parameters must be finite");
  LacunarySymbol l;
  l.ratio = static_cast<double>(law.q);
  l.law = law;
  return SymbolSeq(std::move(l), Monotonicity::general);
}

SymbolSeq SymbolSeq::randomized(SymbolSeq base, DistTag dist, RngSpec rng) {
  return SymbolSeq(RandomizedSymbol{std::make_shared<const SymbolSeq>(std::move(base)), dist, rng},
                   Monotonicity::general);
}

cplx SymbolSeq::value(std::size_t n) const {
  return std::visit(overloaded{
                        [&](const ExplicitSymbol& e) { return n < e.values.size() ? e.values[n] : cplx{0.0}; },
                        [&](const PowerLogSymbol& p) { return cplx{powerlog_value(p, n), 0.0}; },
                        [&](const MomentSymbol& m) { return cplx{moment(m.measure, n), 0.0}; },
                        [&](const LacunarySymbol& l) {
                          if (l.law) {
                            const auto k = law_exponent(*l.law, n);
                            return k ? cplx{law_value(*l.law, *k)} : cplx{0.0};
                          }
                          const auto it = std::lower_bound(l.support.begin(), l.support.end(), n);
                          if (it != l.support.end() && *it == n) return l.values[it - l.support.begin()];
                          return cplx{0.0};
                        },
                        [&](const RandomizedSymbol& r) {
                          return draw(r.dist, r.rng, n) * std::conj(r.base->value(n));
                        },
                    },
                    kind_);
}

std::vector<cplx> SymbolSeq::values(std::size_t count) const {
  std::vector<cplx> out(count);
  std::visit(overloaded{
                 [&](const ExplicitSymbol& e) {
                   for (std::size_t n = 0; n < count && n < e.values.size(); ++n) out[n] = e.values[n];
                 },
                 [&](const PowerLogSymbol& p) {
                   for (std::size_t n = 0; n < count; ++n) out[n] = powerlog_value(p, n);
                 },
                 [&](const MomentSymbol& m) {
                   const auto mu = dhankel::moments(m.measure, count);
                   for (std::size_t n = 0; n < count; ++n) out[n] = mu[n];
                 },
                 [&](const LacunarySymbol& l) {
                   if (l.law) {
                     std::size_t p = 1;
                     for (std::size_t k = 0; p < count; ++k) {
                       out[p] = law_value(*l.law, k);
                       if (p > count / l.law->q) break;
                       p *= l.law->q;
                     }
                     return;
                   }
                   for (std::size_t k = 0; k < l.support.size() && l.support[k] < count; ++k)
                     out[l.support[k]] = l.values[k];
                 },
                 [&](const RandomizedSymbol& r) {
                   const auto base = r.base->values(count);
                   for (std::size_t n = 0; n < count; ++n) out[n] = draw(r.dist, r.rng, n) * std::conj(base[n]);
                 },
             },
             kind_);
  return out;
}

std::optional<std::size_t> SymbolSeq::support_end() const {
  return std::visit(overloaded{
                        [](const ExplicitSymbol& e) -> std::optional<std::size_t> { return e.values.size(); },
                        [](const PowerLogSymbol& p) -> std::optional<std::size_t> {
                          if (p.scale == 0.0) return std::size_t{0};
                          return std::nullopt;
                        },
                        [](const MomentSymbol& m) -> std::optional<std::size_t> {
                          if (m.measure.is_zero()) return std::size_t{0};
                          return std::nullopt;
                        },
                        [](const LacunarySymbol& l) -> std::optional<std::size_t> {
                          if (l.law) {
                            if (l.law->scale == 0.0) return std::size_t{0};
                            return std::nullopt;
                          }
                          return l.support.empty() ? 0 : l.support.back() + 1;
                        },
                        [](const RandomizedSymbol& r) { return r.base->support_end(); },
                    },
                    kind_);
}

bool SymbolSeq::is_real() const {
  return std::visit(overloaded{
                        [](const ExplicitSymbol& e) {
                          for (const auto& c : e.values)
                            if (c.imag() != 0.0) return false;
                          return true;
                        },
                        [](const PowerLogSymbol&) { return true; },
                        [](const MomentSymbol&) { return true; },
                        [](const LacunarySymbol& l) {
                          for (const auto& c : l.values)
                            if (c.imag() != 0.0) return false;
                          return true;
                        },
                        [](const RandomizedSymbol& r) { return r.base->is_real(); },
                    },
                    kind_);
}

std::string_view to_string(SymbolKind k) noexcept {
  switch (k) {
    case SymbolKind::explicit_list:
      return "explicit";
    case SymbolKind::powerlog:
      return "powerlog";
    case SymbolKind::moments:
      return "moments";
    case SymbolKind::lacunary:
      return "lacunary";
    case SymbolKind::randomized:
      return "randomized";
  }
  return "?";
}

std::string_view to_string(Monotonicity m) noexcept {
  switch (m) {
    case Monotonicity::decreasing_positive:
      return "decreasing-positive";
    case Monotonicity::general:
      return "general";
    case Monotonicity::unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace dhankel
