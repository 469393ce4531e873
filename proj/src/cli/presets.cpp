#include "dhankel/cli/presets.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "dhankel/carleson.hpp"
#include "dhankel/cli/report.hpp"
#include "dhankel/coeffspace.hpp"
#include "dhankel/criteria.hpp"
#include "dhankel/errors.hpp"
#include "dhankel/moments.hpp"
#include "dhankel/quadrature.hpp"
#include "dhankel/stochastic.hpp"

namespace dhankel::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double uniform(const RngSpec& r, std::uint64_t i, double a, double b) { return a + (b - a) * uniform01(r, i); }

std::size_t uniform_int(const RngSpec& r, std::uint64_t i, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(random_bits(r, i) % (hi - lo + 1));
}

TaylorPoly random_poly(const RngSpec& r, std::size_t degree) {
  std::vector<cplx> c(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) c[n] = {uniform(r, 2 * n, -1.0, 1.0), uniform(r, 2 * n + 1, -1.0, 1.0)};
  return TaylorPoly(std::move(c));
}

// ---- 1 ----
PresetResult kernel_suite() {
  const RngSpec rng{0x4B45524E, 1};
  double worst = 0.0;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const RngSpec r = rng.child(i);
    const std::size_t deg = uniform_int(r, 1000, 0, 64);
    const TaylorPoly f = random_poly(r, deg);
    const double fnorm = space_norm(f, SpaceTag::dirichlet_exact);
    for (const double rad : {0.0, 0.3, 0.6, 0.8, 0.95})
      for (int a = 0; a < 8; ++a) {
        const cplx w = std::polar(rad, 2.0 * std::numbers::pi * a / 8.0 + 0.1);
        const double err = std::abs(dirichlet_inner(f, kernel_coeffs(w, deg)) - evaluate(f, w));
        worst = std::max(worst, err / fnorm);
        ++checks;
      }
  }
  return {1, "kernel", worst <= 1e-10, 0, 0, {{"checks", checks}, {"max_relative_error", worst}, {"tolerance", 1e-10}}};
}

// ---- 2 ----
SymbolSeq random_symbol(const RngSpec& r) {
  switch (random_bits(r, 0) % 4) {
    case 0: {
      const std::size_t len = uniform_int(r, 1, 8, 600);
      std::vector<cplx> v(len);
      for (std::size_t n = 0; n < len; ++n)
        v[n] = cplx{uniform(r, 10 + 2 * n, -1, 1), uniform(r, 11 + 2 * n, -1, 1)} / double(n + 1);
      return SymbolSeq::explicit_list(std::move(v));
    }
    case 1:
      return SymbolSeq::powerlog(uniform(r, 2, 0.5, 1.5), uniform(r, 3, 0.0, 2.0), uniform(r, 4, 0.5, 2.0));
    case 2:
      return SymbolSeq::lacunary_law({2 + uniform_int(r, 5, 0, 2), uniform(r, 6, 0.3, 1.0), uniform(r, 7, 0.0, 2.0), 1.0});
    default:
      return SymbolSeq::randomized(SymbolSeq::powerlog(1.0, uniform(r, 8, 0.5, 1.5)), {Distribution::gaussian, true},
                                   r.child(9));
  }
}

PresetResult duality() {
  const RngSpec rng{0xD0A1, 2};
  double worst_entry = 0.0, worst_sigma = 0.0;
  bool all_converged = true;
  for (std::size_t i = 0; i < 50; ++i) {
    const SymbolSeq s = random_symbol(rng.child(i));
    for (const std::size_t n : {32, 256}) {
      const SectionMatrix d = section_matrix(s, OperatorKind::hankel, SpaceTag::dirichlet_section, n);
      const SectionMatrix b = section_matrix(s, OperatorKind::hankel, SpaceTag::bergman, n);
      worst_entry = std::max(worst_entry, (b.entries - d.entries.transpose()).cwiseAbs().maxCoeff());
      const SingularValue sd = top_singular_value(d), sb = top_singular_value(b);
      all_converged = all_converged && sd.converged && sb.converged;
      if (sd.sigma > 0) worst_sigma = std::max(worst_sigma, std::abs(sd.sigma - sb.sigma) / sd.sigma);
    }
  }
  const bool ok = worst_entry <= 1e-15 && worst_sigma <= 1e-10;
  return {2,  "duality", ok, 0, 0,
          {{"max_entry_difference", worst_entry},
           {"max_relative_sigma_difference", worst_sigma},
           {"all_converged", all_converged}}};
}

// ---- 3 ----
// Bracket of S(m) for powerlog(1, beta) from a deep partial sum plus integral bounds
// on sum_{n > M} n (n+1)^-2 log(n+2)^-2beta, which lies between (1 - 3/M) int_{M+3} and int_M of dx/(x log^2beta x).
struct DeepOracle {
  std::vector<long double> suffix;  // suffix[i] = sum_{n = grid[i]}^{M} terms
  double tail_lo = 0.0, tail_hi = kInf;
};

DeepOracle deep_oracle(double beta, const std::vector<std::size_t>& grid, std::size_t deep) {
  DeepOracle o;
  o.suffix.assign(grid.size(), 0.0L);
  long double acc = 0.0L;
  std::size_t gi = grid.size();
  for (std::size_t n = deep + 1; n-- > 0;) {
    const long double x = n;
    acc += x / ((x + 1) * (x + 1)) * std::pow(std::log(x + 2), -2.0L * beta);
    while (gi > 0 && grid[gi - 1] == n) o.suffix[--gi] = acc;
  }
  if (beta > 0.5) {
    const double m = double(deep), e = 2.0 * beta - 1.0;
    o.tail_hi = std::pow(std::log(m), -e) / e;
    o.tail_lo = (1.0 - 3.0 / m) * std::pow(std::log(m + 3.0), -e) / e;
  }
  return o;
}

PresetResult widom_ladder() {
  const ClassifyConfig cfg;
  const std::size_t deep = 10 * cfg.effective_n_max();
  const std::pair<double, Verdict> ladder[] = {{0.5, Verdict::unbounded}, {1.0, Verdict::bounded}, {1.5, Verdict::compact}};
  bool ok = true;
  json rows = json::array();
  for (const auto& [beta, expected] : ladder) {
    const SymbolSeq s = SymbolSeq::powerlog(1.0, beta);
    const ClassReport rep = classify(s, OperatorKind::hankel, cfg);
    const DeepOracle o = deep_oracle(beta, cfg.m_grid, deep);
    bool contained = true;
    for (std::size_t i = 0; i < cfg.m_grid.size(); ++i) {
      const double lg = std::log(double(cfg.m_grid[i]) + 2.0);
      const double olo = (double(o.suffix[i]) + o.tail_lo) * lg, ohi = double(o.suffix[i]) * lg + o.tail_hi * lg;
      const ProfilePoint& p = rep.profile[i];
      const double slack = 1e-12 * std::max(1.0, olo);
      // both are certified brackets of the same value, so they must overlap
      if (p.lower > ohi + slack || p.upper < olo - slack) contained = false;
      if (beta <= 0.5 && !p.divergent) contained = false;
    }
    const bool pass = contained && rep.verdict == expected;
    ok = ok && pass;
    rows.push_back({{"beta", beta},
                    {"verdict", std::string(to_string(rep.verdict))},
                    {"expected", std::string(to_string(expected))},
                    {"decay_ratio", number(rep.decay_ratio)},
                    {"brackets_contained", contained}});
  }
  return {3, "widom-ladder", ok, 0, 0, {{"deep_terms", deep}, {"rows", rows}}};
}

// ---- 4 ----
PresetResult hilbert() {
  const MeasureSpec leb = MeasureSpec::lebesgue();
  double worst = 0.0;
  bool exact = true;
  for (std::size_t n = 0; n <= 64; ++n) {
    const double closed = moment(leb, n);
    exact = exact && closed == 1.0 / double(n + 1);
    worst = std::max(worst, std::abs(closed - moment(leb, n, MomentMethod::quadrature)));
  }
  const ClassReport rep = classify_measure(leb, OperatorKind::hankel);
  const SymbolSeq s = moment_sequence(leb);
  std::vector<double> norms;
  json rows = json::array();
  bool increasing = true;
  for (const std::size_t n : {64, 256, 1024, 4096}) {
    const SingularValue sv = top_singular_value(section_matrix(s, OperatorKind::hankel, SpaceTag::dirichlet_section, n));
    if (!norms.empty() && !(sv.sigma > norms.back())) increasing = false;
    norms.push_back(sv.sigma);
    rows.push_back({{"n", n}, {"sigma", sv.sigma}, {"converged", sv.converged}});
  }
  const double growth = norms.back() / norms.front();
  const bool ok = exact && worst <= 1e-12 && rep.verdict == Verdict::unbounded && increasing && growth >= 1.2;
  return {4,  "hilbert", ok, 0, 0,
          {{"moments_exact", exact},
           {"max_quadrature_difference", worst},
           {"verdict", std::string(to_string(rep.verdict))},
           {"sections", rows},
           {"growth", growth}}};
}

// ---- 5 ----
PresetResult point_mass() {
  const SymbolSeq s = moment_sequence(MeasureSpec::point_mass(0.5));
  const WidomTail t = widom_tail(s, 0, 64);
  const double target = 4.0 / 9.0;
  const bool contains = t.lower <= target && target <= t.upper && t.width() <= 1e-12;
  const ClassReport rep = classify(s, OperatorKind::hankel);
  json rows = json::array();
  bool decays = true;
  double prev = 0.0;
  for (const std::size_t m : {0, 4, 8, 16}) {
    const SingularValue sv = tail_section_norm(s, OperatorKind::hankel, m, 64);
    if (m > 0 && !(sv.sigma * 4.0 <= prev)) decays = false;
    prev = sv.sigma;
    rows.push_back({{"m", m}, {"n", 64}, {"sigma", sv.sigma}});
  }
  const bool ok = contains && rep.verdict == Verdict::compact && decays;
  return {5,  "point-mass", ok, 0, 0,
          {{"lower", t.lower},
           {"upper", t.upper},
           {"verdict", std::string(to_string(rep.verdict))},
           {"tails", rows},
           {"decay_factor_4", decays}}};
}

// ---- 6 ----
PresetResult cesaro_closed_form() {
  const RngSpec rng{0xCE5A, 6};
  const std::size_t n = 256;
  bool ok = true;
  double worst_gap = 0.0;
  json rows = json::array();
  for (std::size_t i = 0; i < 20; ++i) {
    const RngSpec r = rng.child(i);
    SymbolSeq s;
    if (i % 2 == 0) {
      const std::size_t len = uniform_int(r, 0, 8, 200);
      std::vector<cplx> v(len);
      for (std::size_t k = 0; k < len; ++k)
        v[k] = cplx{uniform(r, 1 + 2 * k, -1, 1), uniform(r, 2 + 2 * k, -1, 1)} / double(k + 1);
      s = SymbolSeq::explicit_list(std::move(v));
    } else {
      s = SymbolSeq::powerlog(uniform(r, 0, 1.0, 1.5), uniform(r, 1, 0.6, 2.0));
    }
    const double t = uniform(r, 999, 0.0, 0.95);
    const double closed = cesaro_rkt_norm(s, t, n);
    const double pipeline =
        space_norm(cesaro_apply(s, normalized_kernel_coeffs(t, n).kernel, n), SpaceTag::dirichlet_exact);
    const double tail = cesaro_rkt_tail_bound(s, t, n);
    const double allowance = std::sqrt(closed * closed + tail) - closed + 1e-12 * std::max(closed, pipeline);
    const double deep = cesaro_rkt_norm(s, t, 8 * n);
    const bool deep_ok = deep >= closed * (1 - 1e-12) && deep <= std::sqrt(closed * closed + tail) * (1 + 1e-12);
    // t-free bound: normalizer * S_k^2 <= 1 + H_k by Cauchy-Schwarz against the kernel norm
    const auto eta = s.values(n + 1);
    double bound2 = std::norm(eta[0]), h = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      h += 1.0 / double(k);
      bound2 += double(k) * std::norm(eta[k]) * (1.0 + h);
    }
    const double bound = std::sqrt(bound2) * (1 + 1e-12);
    const bool pass = std::abs(pipeline - closed) <= allowance && deep_ok && closed <= bound && pipeline <= bound;
    ok = ok && pass;
    worst_gap = std::max(worst_gap, std::abs(pipeline - closed));
    rows.push_back({{"t", t},
                    {"closed_form", closed},
                    {"pipeline", pipeline},
                    {"tail_bound", number(tail)},
                    {"coefficient_bound", bound},
                    {"passed", pass}});
  }
  return {6, "cesaro-closed-form", ok, 0, 0, {{"n", n}, {"max_gap", worst_gap}, {"pairs", rows}}};
}

// ---- 7 ----
PresetResult fourth_moment() {
  const RngSpec rng{0x4A4D, 7};
  double worst = 0.0;
  bool below = true;
  for (std::size_t i = 0; i < 100; ++i) {
    const RngSpec r = rng.child(i);
    std::vector<double> a(uniform_int(r, 0, 1, 14));
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = uniform(r, k + 1, -3.0, 3.0);
    const double exact = fourth_moment_exact_rademacher(a);
    const double formula = fourth_moment_rademacher_formula(a);
    double s2 = 0.0;
    for (double x : a) s2 += x * x;
    worst = std::max(worst, std::abs(exact - formula) / std::abs(formula));
    below = below && exact <= 3.0 * s2 * s2;
  }
  std::vector<cplx> a(100);
  const RngSpec ra = rng.child(1000);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = {uniform(ra, 2 * k, -1, 1), uniform(ra, 2 * k + 1, -1, 1)};
  const MonteCarloEstimate mc = fourth_moment_mc(a, {Distribution::gaussian, true}, 100000, rng.child(2000));
  const bool mc_ok = mc.estimate <= mc.bound + 4.0 * mc.stderr_;
  return {7,  "fourth-moment", worst <= 1e-12 && below && mc_ok, 0, 0,
          {{"max_relative_difference", worst},
           {"exact_below_bound", below},
           {"mc_estimate", mc.estimate},
           {"mc_stderr", mc.stderr_},
           {"mc_bound", mc.bound},
           {"seed", 0x4A4D}}};
}

// ---- 8 ----
PresetResult random_contrast() {
  const SymbolSeq base = SymbolSeq::powerlog(1.0, 1.0);
  const RngSpec rng{20240607, 8};
  const TailContrast tc = random_tail_experiment(base, {Distribution::rademacher, true}, 32, {1024}, 2048, rng);
  const TailContrastRow& row = tc.rows.front();
  const bool ok = row.randomized.median <= 0.5 * row.deterministic;
  return {8,  "random-contrast", ok, 0, 0,
          {{"n", 2048},
           {"m", 1024},
           {"median", row.randomized.median},
           {"q25", row.randomized.q25},
           {"q75", row.randomized.q75},
           {"deterministic", row.deterministic},
           {"unconverged_replicas", row.unconverged},
           {"seed", rng.seed}}};
}

// ---- 9 ----
PresetResult lacunary() {
  const SymbolSeq conv = SymbolSeq::lacunary_law({2, 0.5, 1.0, 1.0});
  const SymbolSeq div = SymbolSeq::lacunary_law({2, 0.5, 0.0, 1.0});
  const TailBracket mc = dirichlet_membership(conv, 4096), md = dirichlet_membership(div, 4096);
  json tails = json::array();
  bool halving = true;
  double prev = 0.0, worst_factor = kInf;
  for (std::size_t m = 1; m <= 512; m *= 2) {
    const double sigma = tail_section_norm(conv, OperatorKind::hankel, m, 1024).sigma;
    if (m > 1) {
      worst_factor = std::min(worst_factor, prev / sigma);
      if (!(sigma * 2.0 <= prev)) halving = false;
    }
    prev = sigma;
    tails.push_back({{"m", m}, {"n", 1024}, {"sigma", sigma}});
  }
  json sections = json::array();
  bool increasing = true;
  std::vector<double> norms;
  for (std::size_t n = 64; n <= 1024; n *= 2) {
    const double sigma = top_singular_value(section_matrix(div, OperatorKind::hankel, SpaceTag::dirichlet_section, n)).sigma;
    if (!norms.empty() && !(sigma > norms.back())) increasing = false;
    norms.push_back(sigma);
    sections.push_back({{"n", n}, {"sigma", sigma}});
  }
  const double growth = norms.back() / norms.front();
  const bool ok = mc.finite() && halving && md.divergent && increasing && growth >= 1.15;
  return {9,  "lacunary", ok, 0, 0,
          {{"membership_upper", number(mc.upper)},
           {"tails", tails},
           {"min_decay_factor", number(worst_factor)},
           {"divergent_membership", md.divergent},
           {"sections", sections},
           {"section_growth", growth}}};
}

// ---- 10 ----
PresetResult double_sum() {
  const RngSpec rng{0xB0B, 10};
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const RngSpec r = rng.child(i);
    const std::size_t len = uniform_int(r, 0, 2, 512);
    const auto shape = random_bits(r, 1) % 3;
    std::vector<double> a(len);
    for (std::size_t n = 1; n < len; ++n) {
      const double u = uniform01(r, n + 2), x = double(n);
      a[n] = shape == 0 ? u : shape == 1 ? u / x : u / (x * std::log(x + 1.0));
    }
    max_ratio = std::max(max_ratio, double_sum_ratio(a).ratio);
  }
  const bool ok = std::isfinite(max_ratio) && max_ratio <= 10.0;
  return {10, "double-sum", ok, 0, 0, {{"vectors", 1000}, {"max_ratio", max_ratio}, {"ceiling", 10.0}, {"seed", rng.seed}}};
}

// ---- 11 ----
PresetResult carleson_cross_check() {
  const std::size_t grid[] = {64, 128, 256};
  auto sweep = [&](const SymbolSeq& s) {
    std::vector<double> x;
    for (const std::size_t n : grid) x.push_back(x_norm(conjugate_symbol_poly(s, n), n));
    return x;
  };
  const auto sat = sweep(SymbolSeq::powerlog(1.0, 1.0));
  const auto grow = sweep(SymbolSeq::powerlog(1.0, 0.5));
  const double sat_ratio = sat[2] / sat[1], grow_ratio = grow[2] / grow[0];

  const SymbolSeq battery[] = {SymbolSeq::powerlog(1.0, 1.0), SymbolSeq::powerlog(1.0, 0.5),
                               SymbolSeq::powerlog(1.5, 0.0), SymbolSeq::lacunary_law({2, 0.5, 1.0, 1.0})};
  double lo = kInf, hi = 0.0;
  for (const auto& s : battery)
    for (const std::size_t n : grid) {
      const double sigma = top_singular_value(section_matrix(s, OperatorKind::hankel, SpaceTag::dirichlet_section, n)).sigma;
      const double x = x_norm(conjugate_symbol_poly(s, 2 * n), 2 * n);
      lo = std::min(lo, sigma * sigma / x);
      hi = std::max(hi, sigma * sigma / x);
    }
  const bool ok = sat_ratio <= 1.15 && grow_ratio >= 1.2 && lo >= 1.0 / 50.0 && hi <= 50.0;
  return {11, "carleson-cross-check", ok, 0, 0,
          {{"x_norm_powerlog_1_1", sat},
           {"x_norm_powerlog_1_half", grow},
           {"saturation_ratio", sat_ratio},
           {"growth_ratio", grow_ratio},
           {"section_to_x_min", lo},
           {"section_to_x_max", hi}}};
}

// ---- 12 ----
// int z^j conj(z)^k |b'|^2 dA by Gauss-Legendre in r and the trapezoid rule in theta (exact for these degrees).
cplx polar_gram_entry(const TaylorPoly& b, std::size_t j, std::size_t k) {
  const TaylorPoly d = b.derivative();
  const auto rule = quad::gauss_legendre(32, 0.0, 1.0);
  const std::size_t m = 64;
  cplx total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    cplx ring = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * double(a) / double(m));
      ring += std::pow(z, int(j)) * std::pow(std::conj(z), int(k)) * std::norm(evaluate(d, z));
    }
    total += rule.weights[i] * 2.0 * r * ring / double(m);
  }
  return total;
}

PresetResult gram_exactness() {
  const RngSpec rng{0x6AA, 12};
  double worst = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const RngSpec r = rng.child(i);
    const TaylorPoly b = random_poly(r, uniform_int(r, 1000, 0, 8));
    const std::size_t n = uniform_int(r, 1001, 0, 8);
    const GramMatrix g = symbol_gram(b, n);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = 0; k <= n; ++k)
        worst = std::max(worst, std::abs(g.entries(long(j), long(k)) - polar_gram_entry(b, j, k)));
  }
  const double mixed = mixed_norm(TaylorPoly{0.0, 0.0, 1.0}, 4.0);
  const bool ok = worst <= 1e-10 && std::abs(mixed - 4.0 / 3.0) <= 1e-10;
  return {12, "gram-exactness", ok, 0, 0, {{"max_gram_difference", worst}, {"mixed_norm_z2_p4", mixed}}};
}

Preset make(int id, const char* name, const char* summary, double limit, PresetResult (*fn)()) {
  return {id, name, summary, limit, [=] {
            const auto t0 = Clock::now();
            PresetResult r = fn();
            r.seconds = seconds_since(t0);
            r.time_limit = limit;
            r.details["within_time_limit"] = r.seconds < limit;
            r.passed = r.passed && r.seconds < limit;
            return r;
          }};
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      make(1, "kernel", "reproducing property of K_w on random polynomials", 5, kernel_suite),
      make(2, "duality", "Bergman section is the transpose of the Dirichlet section", 20, duality),
      make(3, "widom-ladder", "powerlog(1, beta) verdicts and deep-sum bracket check", 10, widom_ladder),
      make(4, "hilbert", "Lebesgue moments and Hilbert section growth", 60, hilbert),
      make(5, "point-mass", "moments of the point mass at 1/2", 10, point_mass),
      make(6, "cesaro-closed-form", "Cesaro kernel norms: closed form vs apply-then-norm", 10, cesaro_closed_form),
      make(7, "fourth-moment", "Rademacher enumeration and Gaussian Monte Carlo", 30, fourth_moment),
      make(8, "random-contrast", "Rademacher-randomized tail norms vs deterministic", 180, random_contrast),
      make(9, "lacunary", "lacunary symbols on powers of two", 60, lacunary),
      make(10, "double-sum", "Hilbert-type double sum ratio ceiling", 30, double_sum),
      make(11, "carleson-cross-check", "x-norm saturation and section/x-norm coupling", 120, carleson_cross_check),
      make(12, "gram-exactness", "Gram matrix vs polar quadrature, mixed norm of z^2", 5, gram_exactness),
  };
  return all;
}

PresetResult run_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p.run();
  throw ConfigError("/presets", "unknown preset '" + name + "'");
}

}  // namespace dhankel::cli
