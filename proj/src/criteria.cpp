#include "dhankel/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dhankel/coeffspace.hpp"
#include "dhankel/errors.hpp"
#include "dhankel/summation.hpp"

namespace dhankel {

std::string_view to_string(RemainderPolicy p) noexcept {
  switch (p) {
    case RemainderPolicy::exact:
      return "exact";
    case RemainderPolicy::integral_comparison:
      return "integral-comparison";
    case RemainderPolicy::geometric:
      return "geometric";
    case RemainderPolicy::bounded_multiplier:
      return "bounded-multiplier";
    case RemainderPolicy::unknown:
      return "unknown";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::unbounded:
      return "unbounded";
    case Verdict::bounded:
      return "bounded";
    case Verdict::compact:
      return "compact";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Applicability a) noexcept {
  return a == Applicability::theorem_exact ? "theorem-exact" : "heuristic";
}

double TailBracket::mid() const noexcept { return upper < kInf ? 0.5 * (lower + upper) : kInf; }
double ProfilePoint::mid() const noexcept { return upper < kInf ? 0.5 * (lower + upper) : kInf; }

std::vector<std::size_t> ClassifyConfig::default_m_grid() {
  std::vector<std::size_t> g;
  for (int p = 4; p <= 14; ++p) g.push_back(std::size_t{1} << p);
  return g;
}

std::size_t ClassifyConfig::effective_n_max() const {
  if (n_max > 0) return n_max;
  return m_grid.empty() ? 1024 : 64 * m_grid.back();
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Remainder {
  double lower = 0.0;
  double upper = 0.0;
  bool divergent = false;
  RemainderPolicy policy = RemainderPolicy::exact;
};

// Bracket of sum_{n >= start} (n + offset) |lambda_n|^2 for lambda_n = scale (n+1)^-alpha log(n+2)^-beta,
// start >= 1, by comparison with int x^p log(x)^-2beta dx, x = n + 2, p = 1 - 2 alpha.
Remainder powerlog_remainder(const PowerLogSymbol& s, std::size_t start, int offset) {
  Remainder r;
  r.policy = RemainderPolicy::integral_comparison;
  if (s.scale == 0.0) return r;
  if (s.beta < 0.0) {
    r.policy = RemainderPolicy::unknown;
    r.upper = kInf;
    return r;
  }
  const double p = 1.0 - 2.0 * s.alpha;
  const double b2 = 2.0 * s.beta;
  auto diverge = [&] {
    r.divergent = true;
    r.upper = kInf;
    return r;
  };
  if (p > -1.0) return diverge();  // alpha < 1: int x^p dx diverges
  const double x0 = static_cast<double>(start) + 2.0;
  const double u0 = std::log(x0);
  double i_lo = 0.0, i_hi = 0.0;
  if (p == -1.0) {
    if (!(b2 > 1.0)) return diverge();
    i_lo = i_hi = std::pow(u0, 1.0 - b2) / (b2 - 1.0);
  } else {
    const double c = -(p + 1.0);  // 2 alpha - 2 > 0
    const double head = std::exp(-c * u0) * std::pow(u0, -b2);
    i_hi = head / c;
    i_lo = head / (c + b2 / u0);
  }
  const double phi0 = std::pow(x0, p) * std::pow(u0, -b2);
  const double shift = std::pow(1.0 - 1.0 / x0, p);  // (n+1)^p = x^p (1 - 1/x)^p, monotone in x
  double rho_lo = std::min(1.0, shift);
  const double rho_hi = std::max(1.0, shift);
  if (offset == 0) rho_lo *= static_cast<double>(start) / static_cast<double>(start + 1);
  const double s2 = s.scale * s.scale;
  r.lower = s2 * rho_lo * i_lo;
  r.upper = s2 * rho_hi * (phi0 + i_hi);
  return r;
}

// mu_n <= mu_0 rho^n: sum_{n >= start} (n + o) r^n = r^start ((start + o)/(1-r) + r/(1-r)^2), r = rho^2.
Remainder geometric_remainder(const MeasureSpec& m, std::size_t start, int offset) {
  Remainder r;
  r.policy = RemainderPolicy::geometric;
  const double rho = m.support_sup();
  if (m.is_zero() || rho == 0.0) return r;
  const double q = rho * rho;
  const double mass = m.total_mass();
  const double st = static_cast<double>(start);
  const double head = std::exp(st * std::log(q));
  r.upper = mass * mass * head * ((st + offset) / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)));
  return r;
}

// Infinite lacunary law: terms (q^k + o) q^{-2ak} (k+1)^{-2g} over k >= k0, q^{k0} >= start.
Remainder lacunary_remainder(const LacunaryLaw& l, std::size_t start, int offset) {
  Remainder r;
  if (l.scale == 0.0) return r;
  const double q = static_cast<double>(l.q);
  double k0 = 0.0;
  for (double p = 1.0; p < static_cast<double>(start); p *= q) k0 += 1.0;
  const double e = 1.0 - 2.0 * l.decay;
  const double g2 = 2.0 * l.log_power;
  const double s2 = l.scale * l.scale;
  if (e > 0.0 || (e == 0.0 && g2 <= 1.0)) {
    r.policy = RemainderPolicy::integral_comparison;
    r.divergent = true;
    r.upper = kInf;
    return r;
  }
  if (g2 < 0.0) return Remainder{0.0, kInf, false, RemainderPolicy::unknown};
  const double head = std::pow(k0 + 1.0, -g2);
  const double extra = offset == 0 ? 0.0 : std::pow(q, -2.0 * l.decay * k0) * head / (1.0 - std::pow(q, -2.0 * l.decay));
  if (e == 0.0) {
    r.policy = RemainderPolicy::integral_comparison;
    const double integral = std::pow(k0 + 1.0, 1.0 - g2) / (g2 - 1.0);
    r.lower = s2 * integral;
    r.upper = s2 * (head + integral + extra);
  } else {
    r.policy = RemainderPolicy::geometric;
    const double first = std::pow(q, e * k0) * head;
    r.lower = s2 * first;
    r.upper = s2 * (first / (1.0 - std::pow(q, e)) + extra);
  }
  return r;
}

Remainder remainder_from(const SymbolSeq& s, std::size_t start, int offset) {
  return std::visit(overloaded{
                        [&](const PowerLogSymbol& p) { return powerlog_remainder(p, start, offset); },
                        [&](const MomentSymbol& m) {
                          if (m.measure.support_sup() < 1.0) return geometric_remainder(m.measure, start, offset);
                          return Remainder{0.0, kInf, false, RemainderPolicy::unknown};
                        },
                        [&](const LacunarySymbol& l) {
                          if (l.law) return lacunary_remainder(*l.law, start, offset);
                          return Remainder{};
                        },
                        [&](const RandomizedSymbol& r) {
                          const Remainder base = remainder_from(*r.base, start, offset);
                          if (r.dist.kind == Distribution::rademacher) {
                            // |X_n| = scale exactly
                            const double s2 = r.dist.scale() * r.dist.scale();
                            return Remainder{base.lower * s2, base.upper * s2, base.divergent,
                                             base.policy == RemainderPolicy::exact ? RemainderPolicy::exact
                                                                                   : RemainderPolicy::bounded_multiplier};
                          }
                          const double bound = r.dist.bound();
                          if (!std::isfinite(bound) || base.divergent || base.upper == kInf)
                            return Remainder{0.0, kInf, false, RemainderPolicy::unknown};
                          return Remainder{0.0, base.upper * bound * bound, false, RemainderPolicy::bounded_multiplier};
                        },
                        [&](const auto&) { return Remainder{0.0, kInf, false, RemainderPolicy::unknown}; },
                    },
                    s.data());
}

// Exact weighted tail for finitely supported symbols.
double finite_tail(const SymbolSeq& s, std::size_t m, int offset) {
  if (const auto* l = std::get_if<LacunarySymbol>(&s.data())) {
    return pairwise_accumulate(0, l->support.size(), [&](std::size_t k) {
      const std::size_t n = l->support[k];
      return n >= m ? static_cast<double>(n + offset) * std::norm(l->values[k]) : 0.0;
    });
  }
  const std::size_t end = *s.support_end();
  if (m >= end) return 0.0;
  const auto v = s.values(end);
  return pairwise_accumulate(m, end, [&](std::size_t n) { return static_cast<double>(n + offset) * std::norm(v[n]); });
}

// Brackets of weighted tails sum_{n >= m} (n + offset)|lambda_n|^2 sharing one coefficient evaluation.
class TailEngine {
 public:
  TailEngine(const SymbolSeq& s, std::size_t n_max, int offset) : s_(s), n_max_(n_max), offset_(offset) {
    finite_ = s.support_end().has_value();
    if (finite_) return;
    const auto v = s.values(n_max + 1);
    terms_.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) terms_[n] = static_cast<double>(n + offset) * std::norm(v[n]);
    rem_ = remainder_from(s, n_max + 1, offset);
  }

  TailBracket bracket(std::size_t m) const {
    TailBracket b;
    if (finite_) {
      b.lower = b.upper = finite_tail(s_, m, offset_);
      b.policy = RemainderPolicy::exact;
      return b;
    }
    double partial = 0.0;
    Remainder rem = rem_;
    if (m <= n_max_)
      partial = pairwise_sum(std::span<const double>(terms_).subspan(m));
    else
      rem = remainder_from(s_, m, offset_);
    b.policy = rem.policy;
    b.divergent = rem.divergent;
    b.lower = partial + rem.lower;
    b.upper = rem.divergent || rem.upper == kInf ? kInf : partial + rem.upper;
    return b;
  }

 private:
  const SymbolSeq& s_;
  std::size_t n_max_;
  int offset_;
  bool finite_ = false;
  std::vector<double> terms_;
  Remainder rem_;
};

}  // namespace

WidomTail widom_tail(const SymbolSeq& s, std::size_t m, std::size_t n_max) {
  WidomTail w;
  static_cast<TailBracket&>(w) = TailEngine(s, n_max, 0).bracket(m);
  w.m = m;
  return w;
}

TailBracket dirichlet_membership(const SymbolSeq& s, std::size_t n_max) { return TailEngine(s, n_max, 1).bracket(0); }

std::vector<ProfilePoint> widom_profile(const SymbolSeq& s, const std::vector<std::size_t>& m_grid, std::size_t n_max) {
  for (std::size_t i = 1; i < m_grid.size(); ++i)
    if (m_grid[i] <= m_grid[i - 1]) throw PreconditionError("widom_profile: m grid must be strictly increasing");
  const TailEngine engine(s, n_max, 0);
  std::vector<ProfilePoint> out;
  out.reserve(m_grid.size());
  for (const std::size_t m : m_grid) {
    const TailBracket b = engine.bracket(m);
    const double lg = std::log(static_cast<double>(m) + 2.0);
    out.push_back({static_cast<double>(m), b.lower * lg, b.upper == kInf ? kInf : b.upper * lg, b.divergent});
  }
  return out;
}

ClassReport classify(const SymbolSeq& s, OperatorKind kind, const ClassifyConfig& cfg) {
  if (kind == OperatorKind::bilinear) throw PreconditionError("classify: operator kind must be hankel or cesaro");
  if (cfg.m_grid.size() < 2) throw PreconditionError("classify: m grid needs at least two points");
  ClassReport rep;
  rep.n_max = cfg.effective_n_max();
  rep.profile = widom_profile(s, cfg.m_grid, rep.n_max);

  std::ostringstream notes;
  if (kind == OperatorKind::cesaro) {
    rep.applicability = Applicability::theorem_exact;
  } else if (s.monotonicity() == Monotonicity::decreasing_positive) {
    rep.applicability = Applicability::theorem_exact;
  } else {
    rep.applicability = Applicability::heuristic;
    notes << "symbol is not a decreasing positive sequence, so the Widom criterion is only a heuristic for the "
             "Hankel operator; use the Carleson route (classify_hankel_general). ";
  }

  const ProfilePoint& last = rep.profile.back();
  const double target = std::log(last.x + 2.0) / 4.0;
  std::size_t ref_idx = 0;
  for (std::size_t i = 1; i + 1 < rep.profile.size(); ++i)
    if (std::abs(std::log(rep.profile[i].x + 2.0) - target) < std::abs(std::log(rep.profile[ref_idx].x + 2.0) - target))
      ref_idx = i;
  const ProfilePoint& ref = rep.profile[ref_idx];
  rep.reference_x = ref.x;
  rep.last_x = last.x;

  auto finish = [&](Verdict v, const std::string& why) {
    rep.verdict = v;
    notes << why;
    rep.notes = notes.str();
    return rep;
  };

  for (const auto& p : rep.profile)
    if (p.divergent) {
      rep.decay_ratio = kInf;
      return finish(Verdict::unbounded, "Widom tail diverges (certified by the remainder bound).");
    }

  if (last.upper == 0.0) {
    rep.decay_ratio = 0.0;
    return finish(Verdict::compact, "Widom tail vanishes identically at the last grid point.");
  }

  if (last.upper == kInf) {
    // no certified remainder: only growth of the certified lower profile can decide
    const double ratio = ref.lower > 0.0 ? last.lower / ref.lower : 0.0;
    rep.decay_ratio = ratio;
    if (ratio > 1.0 + cfg.plateau_band)
      return finish(Verdict::unbounded, "certified lower profile (partial sums) grows beyond the plateau band.");
    return finish(Verdict::inconclusive, "remainder not bracketed; bounded/compact cannot be certified.");
  }

  const auto rel_width = [](const ProfilePoint& p) { return p.upper > 0.0 ? (p.upper - p.lower) / p.upper : 0.0; };
  const double ratio = ref.mid() > 0.0 ? last.mid() / ref.mid() : 0.0;
  rep.decay_ratio = ratio;
  if (ratio > 1.0 + cfg.plateau_band && last.lower > ref.upper)
    return finish(Verdict::unbounded, "normalized Widom tail grows over the last two log-octaves.");
  if (rel_width(last) > cfg.max_rel_width || rel_width(ref) > cfg.max_rel_width)
    return finish(Verdict::inconclusive, "profile brackets too wide to decide.");
  if (ratio <= cfg.compact_factor)
    return finish(Verdict::compact, "normalized Widom tail decays (little-o behaviour).");
  if (std::abs(ratio - 1.0) <= cfg.plateau_band)
    return finish(Verdict::bounded, "normalized Widom tail plateaus (big-O, not little-o).");
  if (ratio > 1.0 + cfg.plateau_band)
    return finish(Verdict::unbounded, "normalized Widom tail grows over the last two log-octaves.");
  return finish(Verdict::inconclusive, "decay ratio between the plateau band and the compactness factor.");
}

double cesaro_rkt_tail_bound(const SymbolSeq& s, double t, std::size_t n) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("cesaro_rkt_tail_bound: t must lie in [0,1)");
  const WidomTail tail = widom_tail(s, n + 1, n);
  if (!tail.finite()) return kInf;
  const double partial_max = 1.0 - std::log1p(-t);  // 1 + sum t^k/k
  const double normalizer = 1.0 / (1.0 - std::log1p(-t * t));
  return normalizer * partial_max * partial_max * tail.upper;
}

RktProbe rkt_probe(const SymbolSeq& s, OperatorKind kind, const std::vector<double>& t_grid, std::size_t n,
                   double kernel_tol) {
  if (kind == OperatorKind::bilinear) throw PreconditionError("rkt_probe: operator kind must be hankel or cesaro");
  RktProbe probe;
  for (const double t : t_grid) {
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("rkt_probe: t grid must lie in [0,1)");
    RktPoint pt;
    pt.t = t;
    pt.input_degree = std::min(n, kernel_degree_for_tail(t, kernel_tol));
    pt.output_degree = n;
    const NormalizedKernel k = normalized_kernel_coeffs(t, pt.input_degree);
    pt.kernel_tail = k.tail_bound * k.normalizer;
    if (kind == OperatorKind::hankel) {
      pt.estimate = space_norm(hankel_apply(s, k.kernel, n, pt.input_degree), SpaceTag::dirichlet_exact);
      pt.output_controlled = false;
    } else {
      pt.estimate = space_norm(cesaro_apply(s, k.kernel, n), SpaceTag::dirichlet_exact);
      pt.closed_form = cesaro_rkt_norm(s, t, n);
      pt.closed_form_tail = cesaro_rkt_tail_bound(s, t, n);
      pt.output_controlled = std::isfinite(pt.closed_form_tail);
    }
    probe.statistic = std::max(probe.statistic, pt.estimate);
    probe.points.push_back(pt);
  }
  if (kind == OperatorKind::hankel)
    probe.notes =
        "Hankel outputs are truncated at degree N with no bound on the discarded tail. For compactness the "
        "stated kernel criterion (lim ||H k_t|| < infinity) differs from the Cesaro analogue (limit 0); the "
        "probe reports the values without resolving this.";
  return probe;
}

DoubleSum double_sum_ratio(const std::vector<double>& a) {
  for (const double x : a)
    if (!(x >= 0.0)) throw DomainError("double_sum_ratio: entries must be nonnegative moduli");
  DoubleSum out;
  if (a.size() < 2) return out;
  const std::size_t len = a.size();
  std::vector<double> inv_log(2 * len + 1, 0.0);
  for (std::size_t s = 2; s < inv_log.size(); ++s) inv_log[s] = 1.0 / std::log(static_cast<double>(s) + 1.0);
  out.lhs = pairwise_accumulate(1, len, [&](std::size_t n) {
    if (a[n] == 0.0) return 0.0;
    return a[n] * pairwise_accumulate(1, len, [&](std::size_t m) { return a[m] * inv_log[n + m]; });
  });
  out.rhs = pairwise_accumulate(1, len, [&](std::size_t n) { return static_cast<double>(n) * a[n] * a[n]; });
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

}  // namespace dhankel
