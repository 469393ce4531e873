#include "dhankel/cli/run.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "dhankel/carleson.hpp"
#include "dhankel/cli/presets.hpp"
#include "dhankel/criteria.hpp"
#include "dhankel/moments.hpp"
#include "dhankel/stochastic.hpp"

namespace dhankel::cli {

namespace {

Curve profile_curve(const std::string& label, const std::vector<ProfilePoint>& profile) {
  Curve c{label, {}};
  for (const auto& p : profile) c.points.push_back({p.x, p.lower, p.mid(), p.upper});
  return c;
}

json bracket_json(const TailBracket& b) {
  return {{"lower", number(b.lower)},
          {"upper", number(b.upper)},
          {"divergent", b.divergent},
          {"policy", std::string(to_string(b.policy))}};
}

json class_report_json(const ClassReport& r) {
  json vanish = json::array();
  for (const auto& c : r.vanishing) vanish.push_back({{"n", c.n}, {"delta", c.delta}, {"fraction", number(c.fraction)}});
  return {{"verdict", std::string(to_string(r.verdict))},
          {"applicability", std::string(to_string(r.applicability))},
          {"decay_ratio", number(r.decay_ratio)},
          {"reference_x", r.reference_x},
          {"last_x", r.last_x},
          {"n_max", r.n_max},
          {"vanishing", std::move(vanish)},
          {"notes", r.notes}};
}

json symbol_json(const SymbolSeq& s) {
  return {{"kind", std::string(to_string(s.kind()))}, {"monotonicity", std::string(to_string(s.monotonicity()))}};
}

Report run_classify(const ExperimentConfig& cfg, Report rep) {
  if (cfg.route == Route::carleson) {
    const TaylorPoly b = conjugate_symbol_poly(*cfg.symbol, cfg.n_grid.back());
    const ClassReport r = classify_hankel_general(b, cfg.n_grid, cfg.carleson);
    rep.results = class_report_json(r);
    rep.results["route"] = "carleson";
    rep.curves.push_back(profile_curve("carleson_norm", r.profile));
  } else {
    const ClassReport r =
        cfg.measure ? classify_measure(*cfg.measure, cfg.kind, cfg.classify) : classify(*cfg.symbol, cfg.kind, cfg.classify);
    rep.results = class_report_json(r);
    rep.results["route"] = "widom";
    rep.results["membership"] = bracket_json(dirichlet_membership(*cfg.symbol, r.n_max));
    rep.curves.push_back(profile_curve("widom_profile", r.profile));
  }
  rep.results["operator"] = std::string(to_string(cfg.kind));
  rep.results["symbol"] = symbol_json(*cfg.symbol);
  return rep;
}

Report run_sections(const ExperimentConfig& cfg, Report rep) {
  Curve norms{"section_norm", {}};
  json rows = json::array();
  for (const std::size_t n : cfg.n_grid) {
    const SingularValue sv = top_singular_value(section_matrix(*cfg.symbol, cfg.kind, cfg.weight, n), cfg.tol);
    norms.points.push_back({double(n), sv.sigma, sv.sigma, sv.sigma});
    rows.push_back({{"n", n}, {"sigma", number(sv.sigma)}, {"converged", sv.converged}, {"iterations", sv.iterations}});
  }
  rep.results["operator"] = std::string(to_string(cfg.kind));
  rep.results["weight"] = std::string(to_string(cfg.weight));
  rep.results["sections"] = std::move(rows);
  rep.curves.push_back(std::move(norms));
  if (!cfg.m_grid.empty()) {
    Curve tails{"tail_norm", {}};
    json trows = json::array();
    for (const std::size_t m : cfg.m_grid) {
      const SingularValue sv = tail_section_norm(*cfg.symbol, cfg.kind, m, cfg.n, cfg.tol);
      tails.points.push_back({double(m), sv.sigma, sv.sigma, sv.sigma});
      trows.push_back({{"m", m},
                       {"n", cfg.n},
                       {"sigma", number(sv.sigma)},
                       {"converged", sv.converged},
                       {"iterations", sv.iterations}});
    }
    rep.results["tails"] = std::move(trows);
    rep.curves.push_back(std::move(tails));
  }
  return rep;
}

Report run_rkt(const ExperimentConfig& cfg, Report rep) {
  const RktProbe probe = rkt_probe(*cfg.symbol, cfg.kind, cfg.t_grid, cfg.n, cfg.kernel_tol);
  Curve c{"rkt", {}};
  json rows = json::array();
  for (const auto& p : probe.points) {
    double lo = p.estimate, hi = kInf;
    if (cfg.kind == OperatorKind::cesaro && p.output_controlled) {
      lo = std::min(p.estimate, p.closed_form);
      hi = std::sqrt(p.closed_form * p.closed_form + p.closed_form_tail);
    }
    c.points.push_back({p.t, lo, p.estimate, hi});
    rows.push_back({{"t", p.t},
                    {"estimate", number(p.estimate)},
                    {"kernel_tail", number(p.kernel_tail)},
                    {"closed_form", number(p.closed_form)},
                    {"closed_form_tail", number(p.closed_form_tail)},
                    {"input_degree", p.input_degree},
                    {"n", p.output_degree},
                    {"output_controlled", p.output_controlled}});
  }
  rep.results = {{"operator", std::string(to_string(cfg.kind))},
                 {"statistic", number(probe.statistic)},
                 {"points", std::move(rows)},
                 {"notes", probe.notes}};
  rep.curves.push_back(std::move(c));
  return rep;
}

Report run_moments(const ExperimentConfig& cfg, Report rep) {
  const auto mu = moments(*cfg.measure, cfg.moment_count);
  Curve c{"moments", {}};
  json table = json::array();
  for (std::size_t n = 0; n < mu.size(); ++n) {
    c.points.push_back({double(n), mu[n], mu[n], mu[n]});
    table.push_back({{"n", n}, {"moment", number(mu[n])}});
  }
  const ClassReport r = classify_measure(*cfg.measure, cfg.kind, cfg.classify);
  rep.results = class_report_json(r);
  rep.results["operator"] = std::string(to_string(cfg.kind));
  rep.results["support_sup"] = cfg.measure->support_sup();
  rep.results["total_mass"] = number(cfg.measure->total_mass());
  rep.results["moments"] = std::move(table);
  rep.curves.push_back(std::move(c));
  rep.curves.push_back(profile_curve("widom_profile", r.profile));
  return rep;
}

Report run_carleson(const ExperimentConfig& cfg, Report rep) {
  const TaylorPoly b = conjugate_symbol_poly(*cfg.symbol, cfg.n_grid.back());
  Curve fnorm{"finite_test_norm", {}}, xnorm{"x_norm", {}};
  json rows = json::array();
  for (const std::size_t n : cfg.n_grid) {
    const TaylorPoly bn = b.resized(n);
    const double f = finite_test_carleson_norm(bn, n);
    const double x = std::norm(bn[0]) + f;
    fnorm.points.push_back({double(n), f, f, f});
    xnorm.points.push_back({double(n), x, x, x});
    Curve restricted{"restricted_n" + std::to_string(n), {}};
    json cells = json::array();
    for (const double d : cfg.delta_grid) {
      const double r = restricted_carleson_norm(bn, n, d);
      restricted.points.push_back({d, r, r, r});
      cells.push_back({{"delta", d}, {"restricted", number(r)}, {"fraction", number(f > 0 ? r / f : 0.0)}});
    }
    rep.curves.push_back(std::move(restricted));
    rows.push_back({{"n", n}, {"finite_test_norm", number(f)}, {"x_norm", number(x)}, {"restricted", std::move(cells)}});
  }
  const ClassReport r = classify_hankel_general(b, cfg.n_grid, cfg.carleson);
  rep.results = class_report_json(r);
  rep.results["sweep"] = std::move(rows);
  rep.curves.insert(rep.curves.begin(), {std::move(fnorm), std::move(xnorm)});
  return rep;
}

Report run_random(const ExperimentConfig& cfg, Report rep) {
  const DistTag dist{cfg.distribution, cfg.normalized};
  const RngSpec rng{*cfg.seed, cfg.stream};
  const TailContrast tc = random_tail_experiment(*cfg.symbol, dist, cfg.replicas, cfg.m_grid, cfg.n, rng);
  Curve rnd{"randomized_tail", {}}, det{"deterministic_tail", {}};
  json rows = json::array();
  for (const auto& row : tc.rows) {
    rnd.points.push_back({double(row.m), row.randomized.q25, row.randomized.median, row.randomized.q75});
    det.points.push_back({double(row.m), row.deterministic, row.deterministic, row.deterministic});
    rows.push_back({{"m", row.m},
                    {"n", cfg.n},
                    {"q25", number(row.randomized.q25)},
                    {"median", number(row.randomized.median)},
                    {"q75", number(row.randomized.q75)},
                    {"deterministic", number(row.deterministic)},
                    {"unconverged_replicas", row.unconverged},
                    {"deterministic_converged", row.deterministic_converged}});
  }
  rep.results = {{"distribution", std::string(to_string(cfg.distribution))},
                 {"normalized", cfg.normalized},
                 {"replicas", cfg.replicas},
                 {"seed", *cfg.seed},
                 {"stream", cfg.stream},
                 {"membership_upper", number(tc.membership_upper)},
                 {"rows", std::move(rows)}};
  rep.curves.push_back(std::move(rnd));
  rep.curves.push_back(std::move(det));
  return rep;
}

std::vector<double> random_vector(const RngSpec& rng, std::size_t max_length) {
  const std::size_t len = 2 + static_cast<std::size_t>(uniform01(rng, 0) * double(max_length - 1));
  const int shape = static_cast<int>(random_bits(rng, 1) % 3);
  std::vector<double> a(len, 0.0);
  for (std::size_t n = 1; n < len; ++n) {
    const double u = uniform01(rng, n + 2);
    const double x = double(n);
    a[n] = shape == 0 ? u : shape == 1 ? u / x : u / (x * std::log(x + 1.0));
  }
  return a;
}

Report run_doublesum(const ExperimentConfig& cfg, Report rep) {
  std::vector<std::vector<double>> vecs = cfg.explicit_vectors;
  if (vecs.empty()) {
    const RngSpec rng{*cfg.seed, cfg.stream};
    for (std::size_t i = 0; i < cfg.vectors; ++i) vecs.push_back(random_vector(rng.child(i), cfg.max_length));
  }
  Curve c{"ratio", {}};
  double max_ratio = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const DoubleSum d = double_sum_ratio(vecs[i]);
    c.points.push_back({double(i), d.ratio, d.ratio, d.ratio});
    if (d.ratio > max_ratio) {
      max_ratio = d.ratio;
      arg = i;
    }
  }
  rep.results = {{"vectors", vecs.size()}, {"max_ratio", number(max_ratio)}, {"argmax", arg}};
  if (cfg.seed) rep.results["seed"] = *cfg.seed;
  rep.curves.push_back(std::move(c));
  return rep;
}

Report run_demo(const ExperimentConfig& cfg, Report rep) {
  std::vector<std::string> names = cfg.presets;
  if (names.size() == 1 && names[0] == "all") {
    names.clear();
    for (const auto& p : presets()) names.push_back(p.name);
  }
  json rows = json::array();
  for (const auto& name : names) {
    const PresetResult r = run_preset(name);
    rep.passed = rep.passed && r.passed;
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"time_limit", r.time_limit},
                    {"details", r.details}});
  }
  rep.results = {{"presets", std::move(rows)}, {"all_passed", rep.passed}};
  return rep;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Report run(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = std::string(to_string(cfg.command));
  rep.config = cfg.source;
  rep.provenance.tool_version = kToolVersion;
  rep.provenance.timestamp = utc_timestamp();
  if (cfg.seed) rep.provenance.seed = *cfg.seed;
  switch (cfg.command) {
    case Command::classify:
      rep = run_classify(cfg, std::move(rep));
      break;
    case Command::sections:
      rep = run_sections(cfg, std::move(rep));
      break;
    case Command::rkt:
      rep = run_rkt(cfg, std::move(rep));
      break;
    case Command::moments:
      rep = run_moments(cfg, std::move(rep));
      break;
    case Command::carleson:
      rep = run_carleson(cfg, std::move(rep));
      break;
    case Command::random_sim:
      rep = run_random(cfg, std::move(rep));
      break;
    case Command::doublesum:
      rep = run_doublesum(cfg, std::move(rep));
      break;
    case Command::demo:
      rep = run_demo(cfg, std::move(rep));
      break;
  }
  rep.provenance.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace dhankel::cli
