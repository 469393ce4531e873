#include "dhankel/cli/config.hpp"

#include <fstream>
#include <set>

#include "dhankel/errors.hpp"

namespace dhankel::cli {

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::classify:
      return "classify";
    case Command::sections:
      return "sections";
    case Command::rkt:
      return "rkt";
    case Command::moments:
      return "moments";
    case Command::carleson:
      return "carleson";
    case Command::random_sim:
      return "random-sim";
    case Command::doublesum:
      return "doublesum";
    case Command::demo:
      return "demo";
  }
  return "?";
}

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "/" : path, "expected an object");
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw ConfigError(child(path, k), "unknown field");
}

double get_double(const json& j, const std::string& key, const std::string& path, std::optional<double> def = {}) {
  if (!j.contains(key)) {
    if (def) return *def;
    throw ConfigError(child(path, key), "required field missing");
  }
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(child(path, key), "expected a number");
  return v.get<double>();
}

std::uint64_t get_u64(const json& j, const std::string& key, const std::string& path,
                      std::optional<std::uint64_t> def = {}) {
  if (!j.contains(key)) {
    if (def) return *def;
    throw ConfigError(child(path, key), "required field missing");
  }
  const json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ConfigError(child(path, key), "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::size_t get_size(const json& j, const std::string& key, const std::string& path, std::optional<std::size_t> def = {}) {
  return static_cast<std::size_t>(get_u64(j, key, path, def ? std::optional<std::uint64_t>(*def) : std::nullopt));
}

bool get_bool(const json& j, const std::string& key, const std::string& path, bool def) {
  if (!j.contains(key)) return def;
  if (!j.at(key).is_boolean()) throw ConfigError(child(path, key), "expected true or false");
  return j.at(key).get<bool>();
}

std::string get_string(const json& j, const std::string& key, const std::string& path,
                       std::optional<std::string> def = {}) {
  if (!j.contains(key)) {
    if (def) return *def;
    throw ConfigError(child(path, key), "required field missing");
  }
  if (!j.at(key).is_string()) throw ConfigError(child(path, key), "expected a string");
  return j.at(key).get<std::string>();
}

template <class T>
std::vector<T> get_grid(const json& j, const std::string& key, const std::string& path, std::vector<T> def,
                        bool required = false) {
  if (!j.contains(key)) {
    if (required) throw ConfigError(child(path, key), "required field missing");
    return def;
  }
  const json& v = j.at(key);
  const std::string p = child(path, key);
  if (!v.is_array() || v.empty()) throw ConfigError(p, "expected a nonempty array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& e = v[i];
    if constexpr (std::is_integral_v<T>) {
      if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0))
        throw ConfigError(child(p, i), "expected a nonnegative integer");
    } else {
      if (!e.is_number()) throw ConfigError(child(p, i), "expected a number");
    }
    out.push_back(e.get<T>());
    if (i > 0 && !(out[i] > out[i - 1])) throw ConfigError(child(p, i), "grid must be strictly increasing");
  }
  return out;
}

cplx parse_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ConfigError(path, "expected a number or a [re, im] pair");
}

std::vector<cplx> parse_complex_list(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(child(path, key), "required field missing");
  const json& v = j.at(key);
  if (!v.is_array()) throw ConfigError(child(path, key), "expected an array");
  std::vector<cplx> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_complex(v[i], child(child(path, key), i)));
  return out;
}

Distribution parse_distribution(const json& j, const std::string& path) {
  const std::string name = get_string(j, "distribution", path, "rademacher");
  try {
    return distribution_from_string(name);
  } catch (const std::exception&) {
    throw ConfigError(child(path, "distribution"), "expected rademacher, uniform-symmetric or gaussian");
  }
}

OperatorKind parse_kind(const json& j, const std::string& path, bool allow_bilinear) {
  const std::string name = get_string(j, "operator", path, "hankel");
  if (name == "hankel") return OperatorKind::hankel;
  if (name == "cesaro") return OperatorKind::cesaro;
  if (name == "bilinear" && allow_bilinear) return OperatorKind::bilinear;
  throw ConfigError(child(path, "operator"),
                    allow_bilinear ? "expected hankel, cesaro or bilinear" : "expected hankel or cesaro");
}

Command parse_command(const json& doc) {
  const std::string name = get_string(doc, "command", "");
  static const std::pair<const char*, Command> table[] = {
      {"classify", Command::classify}, {"sections", Command::sections},     {"rkt", Command::rkt},
      {"moments", Command::moments},   {"carleson", Command::carleson},     {"random-sim", Command::random_sim},
      {"doublesum", Command::doublesum}, {"demo", Command::demo}};
  for (const auto& [k, c] : table)
    if (name == k) return c;
  throw ConfigError("/command", "unknown command '" + name + "'");
}

}  // namespace

MeasureSpec parse_measure(const json& j, const std::string& path) {
  require_object(j, path);
  if (j.contains("preset")) {
    check_keys(j, path, {"preset", "mass"});
    const std::string name = get_string(j, "preset", path);
    const double mass = get_double(j, "mass", path, 1.0);
    if (name == "lebesgue") return MeasureSpec({}, {PowerLogDensity{mass, 0.0, 0.0, 0.0}});
    if (name == "zero") return MeasureSpec{};
    throw ConfigError(child(path, "preset"), "expected lebesgue or zero");
  }
  if (j.contains("mixture")) {
    check_keys(j, path, {"mixture"});
    const json& parts = j.at("mixture");
    const std::string p = child(path, "mixture");
    if (!parts.is_array()) throw ConfigError(p, "expected an array of {weight, measure}");
    MeasureSpec acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string pi = child(p, i);
      require_object(parts[i], pi);
      check_keys(parts[i], pi, {"weight", "measure"});
      const double w = get_double(parts[i], "weight", pi);
      if (!(w > 0.0)) throw ConfigError(child(pi, "weight"), "weight must be positive");
      if (!parts[i].contains("measure")) throw ConfigError(child(pi, "measure"), "required field missing");
      acc = MeasureSpec::mixture(acc, 1.0, parse_measure(parts[i].at("measure"), child(pi, "measure")), w);
    }
    return acc;
  }
  check_keys(j, path, {"atoms", "densities"});
  std::vector<Atom> atoms;
  std::vector<PowerLogDensity> dens;
  if (j.contains("atoms")) {
    const std::string p = child(path, "atoms");
    if (!j.at("atoms").is_array()) throw ConfigError(p, "expected an array");
    for (std::size_t i = 0; i < j.at("atoms").size(); ++i) {
      const json& a = j.at("atoms")[i];
      const std::string pi = child(p, i);
      require_object(a, pi);
      check_keys(a, pi, {"loc", "mass"});
      const double loc = get_double(a, "loc", pi);
      const double mass = get_double(a, "mass", pi, 1.0);
      if (!(loc >= 0.0 && loc < 1.0)) throw ConfigError(child(pi, "loc"), "atom location must lie in [0,1)");
      if (!(mass > 0.0)) throw ConfigError(child(pi, "mass"), "atom mass must be positive");
      atoms.push_back({loc, mass});
    }
  }
  if (j.contains("densities")) {
    const std::string p = child(path, "densities");
    if (!j.at("densities").is_array()) throw ConfigError(p, "expected an array");
    for (std::size_t i = 0; i < j.at("densities").size(); ++i) {
      const json& d = j.at("densities")[i];
      const std::string pi = child(p, i);
      require_object(d, pi);
      check_keys(d, pi, {"c", "gamma", "delta", "kappa"});
      PowerLogDensity w{get_double(d, "c", pi, 1.0), get_double(d, "gamma", pi, 0.0), get_double(d, "delta", pi, 0.0),
                        get_double(d, "kappa", pi, 0.0)};
      if (!(w.c > 0.0)) throw ConfigError(child(pi, "c"), "c must be positive");
      if (!(w.gamma > -1.0)) throw ConfigError(child(pi, "gamma"), "gamma must exceed -1");
      if (!(w.kappa >= 0.0)) throw ConfigError(child(pi, "kappa"), "kappa must be nonnegative");
      if (!std::isfinite(w.delta)) throw ConfigError(child(pi, "delta"), "delta must be finite");
      dens.push_back(w);
    }
  }
  try {
    return MeasureSpec(std::move(atoms), std::move(dens));
  } catch (const PreconditionError& e) {
    throw ConfigError(path, e.what());
  }
}

SymbolSeq parse_symbol(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string type = get_string(j, "type", path);
  try {
    if (type == "explicit") {
      check_keys(j, path, {"type", "values"});
      return SymbolSeq::explicit_list(parse_complex_list(j, "values", path));
    }
    if (type == "powerlog") {
      check_keys(j, path, {"type", "alpha", "beta", "scale"});
      return SymbolSeq::powerlog(get_double(j, "alpha", path), get_double(j, "beta", path, 0.0),
                                 get_double(j, "scale", path, 1.0));
    }
    if (type == "hilbert") {
      check_keys(j, path, {"type"});
      return SymbolSeq::hilbert();
    }
    if (type == "moments") {
      check_keys(j, path, {"type", "measure"});
      if (!j.contains("measure")) throw ConfigError(child(path, "measure"), "required field missing");
      return SymbolSeq::moments(parse_measure(j.at("measure"), child(path, "measure")));
    }
    if (type == "lacunary") {
      if (j.contains("support")) {
        check_keys(j, path, {"type", "support", "values"});
        const json& sup = j.at("support");
        if (!sup.is_array()) throw ConfigError(child(path, "support"), "expected an array");
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < sup.size(); ++i) {
          if (!sup[i].is_number_unsigned() && !(sup[i].is_number_integer() && sup[i].get<std::int64_t>() > 0))
            throw ConfigError(child(child(path, "support"), i), "expected a positive integer");
          support.push_back(sup[i].get<std::size_t>());
        }
        return SymbolSeq::lacunary(std::move(support), parse_complex_list(j, "values", path));
      }
      check_keys(j, path, {"type", "q", "decay", "log_power", "scale"});
      return SymbolSeq::lacunary_law({get_size(j, "q", path, 2), get_double(j, "decay", path, 0.5),
                                      get_double(j, "log_power", path, 0.0), get_double(j, "scale", path, 1.0)});
    }
    if (type == "randomized") {
      check_keys(j, path, {"type", "base", "distribution", "normalized", "seed", "stream"});
      if (!j.contains("base")) throw ConfigError(child(path, "base"), "required field missing");
      const SymbolSeq base = parse_symbol(j.at("base"), child(path, "base"));
      const DistTag dist{parse_distribution(j, path), get_bool(j, "normalized", path, true)};
      const RngSpec rng{get_u64(j, "seed", path), get_u64(j, "stream", path, 0)};
      return SymbolSeq::randomized(base, dist, rng);
    }
  } catch (const PreconditionError& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(child(path, "type"), "unknown symbol type '" + type + "'");
}

ExperimentConfig parse_config(const json& doc) {
  require_object(doc, "");
  ExperimentConfig cfg;
  cfg.source = doc;
  cfg.command = parse_command(doc);
  check_keys(doc, "",
             {"command", "description", "symbol", "measure", "operator", "weight", "route", "n", "n_grid", "m_grid",
              "t_grid", "delta_grid", "tol", "kernel_tol", "count", "n_max", "plateau_band", "compact_factor",
              "max_rel_width", "growth_ratio", "saturation_band", "vanish_fraction", "distribution", "normalized",
              "replicas", "seed", "stream", "vectors", "max_length", "presets"});

  if (doc.contains("symbol")) cfg.symbol = parse_symbol(doc.at("symbol"), "/symbol");
  if (doc.contains("measure")) cfg.measure = parse_measure(doc.at("measure"), "/measure");
  if (cfg.symbol && cfg.measure) throw ConfigError("/measure", "give either a symbol or a measure, not both");
  if (doc.contains("seed")) cfg.seed = get_u64(doc, "seed", "");
  cfg.stream = get_u64(doc, "stream", "", 0);

  auto need_symbol_or_measure = [&] {
    if (!cfg.symbol && !cfg.measure) throw ConfigError("/symbol", "a symbol or a measure is required");
    if (!cfg.symbol) cfg.symbol = SymbolSeq::moments(*cfg.measure);
  };

  cfg.n = get_size(doc, "n", "", cfg.n);
  cfg.tol = get_double(doc, "tol", "", cfg.tol);
  cfg.classify.m_grid = get_grid<std::size_t>(doc, "m_grid", "", cfg.classify.m_grid);
  cfg.classify.n_max = get_size(doc, "n_max", "", 0);
  cfg.classify.plateau_band = get_double(doc, "plateau_band", "", cfg.classify.plateau_band);
  cfg.classify.compact_factor = get_double(doc, "compact_factor", "", cfg.classify.compact_factor);
  cfg.classify.max_rel_width = get_double(doc, "max_rel_width", "", cfg.classify.max_rel_width);
  cfg.carleson.growth_ratio = get_double(doc, "growth_ratio", "", cfg.carleson.growth_ratio);
  cfg.carleson.saturation_band = get_double(doc, "saturation_band", "", cfg.carleson.saturation_band);
  cfg.carleson.vanish_fraction = get_double(doc, "vanish_fraction", "", cfg.carleson.vanish_fraction);
  cfg.delta_grid = get_grid<double>(doc, "delta_grid", "", CarlesonConfig::default_delta_grid());
  for (std::size_t i = 0; i < cfg.delta_grid.size(); ++i)
    if (!(cfg.delta_grid[i] > 0.0 && cfg.delta_grid[i] < 1.0))
      throw ConfigError(child("/delta_grid", i), "delta must lie in (0,1)");
  cfg.carleson.delta_grid = cfg.delta_grid;
  cfg.m_grid = cfg.classify.m_grid;
  if (cfg.classify.m_grid.size() < 2) throw ConfigError("/m_grid", "at least two grid points are required");

  const std::string weight = get_string(doc, "weight", "", "dirichlet-section");
  if (weight == "dirichlet-section")
    cfg.weight = SpaceTag::dirichlet_section;
  else if (weight == "bergman")
    cfg.weight = SpaceTag::bergman;
  else
    throw ConfigError("/weight", "expected dirichlet-section or bergman");

  const std::vector<std::size_t> default_n_grid{64, 128, 256, 512};
  switch (cfg.command) {
    case Command::classify: {
      need_symbol_or_measure();
      cfg.kind = parse_kind(doc, "", false);
      const std::string route = get_string(doc, "route", "", "widom");
      if (route == "widom")
        cfg.route = Route::widom;
      else if (route == "carleson")
        cfg.route = Route::carleson;
      else
        throw ConfigError("/route", "expected widom or carleson");
      if (cfg.route == Route::carleson && cfg.kind != OperatorKind::hankel)
        throw ConfigError("/route", "the carleson route applies to hankel operators only");
      cfg.n_grid = get_grid<std::size_t>(doc, "n_grid", "", default_n_grid);
      if (cfg.route == Route::carleson && cfg.n_grid.size() < 2)
        throw ConfigError("/n_grid", "at least two grid points are required");
      break;
    }
    case Command::sections:
      need_symbol_or_measure();
      cfg.kind = parse_kind(doc, "", true);
      cfg.n_grid = get_grid<std::size_t>(doc, "n_grid", "", default_n_grid);
      if (cfg.n_grid.front() == 0) throw ConfigError("/n_grid/0", "section size must be positive");
      if (!doc.contains("m_grid")) cfg.m_grid.clear();
      for (std::size_t i = 0; i < cfg.m_grid.size(); ++i)
        if (cfg.m_grid[i] >= cfg.n) throw ConfigError(child("/m_grid", i), "tail index must be below n");
      break;
    case Command::rkt:
      need_symbol_or_measure();
      cfg.kind = parse_kind(doc, "", false);
      cfg.t_grid = get_grid<double>(doc, "t_grid", "", {}, true);
      for (std::size_t i = 0; i < cfg.t_grid.size(); ++i)
        if (!(cfg.t_grid[i] >= 0.0 && cfg.t_grid[i] < 1.0)) throw ConfigError(child("/t_grid", i), "t must lie in [0,1)");
      cfg.kernel_tol = get_double(doc, "kernel_tol", "", cfg.kernel_tol);
      if (!(cfg.kernel_tol > 0.0)) throw ConfigError("/kernel_tol", "must be positive");
      break;
    case Command::moments:
      if (!cfg.measure) throw ConfigError("/measure", "required field missing");
      cfg.kind = parse_kind(doc, "", false);
      cfg.moment_count = get_size(doc, "count", "", cfg.moment_count);
      break;
    case Command::carleson:
      if (!cfg.symbol) throw ConfigError("/symbol", "required field missing");
      cfg.n_grid = get_grid<std::size_t>(doc, "n_grid", "", default_n_grid);
      if (cfg.n_grid.size() < 2) throw ConfigError("/n_grid", "at least two grid points are required");
      break;
    case Command::random_sim:
      if (!cfg.symbol) throw ConfigError("/symbol", "required field missing");
      if (!cfg.seed) throw ConfigError("/seed", "stochastic commands require a seed");
      cfg.distribution = parse_distribution(doc, "");
      cfg.normalized = get_bool(doc, "normalized", "", true);
      cfg.replicas = get_size(doc, "replicas", "", cfg.replicas);
      if (cfg.replicas == 0) throw ConfigError("/replicas", "at least one replica is required");
      if (!doc.contains("m_grid")) throw ConfigError("/m_grid", "required field missing");
      for (std::size_t i = 0; i < cfg.m_grid.size(); ++i)
        if (cfg.m_grid[i] >= cfg.n) throw ConfigError(child("/m_grid", i), "tail index must be below n");
      break;
    case Command::doublesum:
      if (doc.contains("vectors") && doc.at("vectors").is_array()) {
        const json& v = doc.at("vectors");
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!v[i].is_array()) throw ConfigError(child("/vectors", i), "expected an array of numbers");
          std::vector<double> a;
          for (std::size_t k = 0; k < v[i].size(); ++k) {
            const json& e = v[i][k];
            if (!e.is_number() || e.get<double>() < 0.0)
              throw ConfigError(child(child("/vectors", i), k), "expected a nonnegative number");
            a.push_back(e.get<double>());
          }
          cfg.explicit_vectors.push_back(std::move(a));
        }
      } else {
        cfg.vectors = get_size(doc, "vectors", "", cfg.vectors);
        cfg.max_length = get_size(doc, "max_length", "", cfg.max_length);
        if (cfg.max_length < 2) throw ConfigError("/max_length", "must be at least 2");
        if (!cfg.seed) throw ConfigError("/seed", "stochastic commands require a seed");
      }
      break;
    case Command::demo: {
      if (!doc.contains("presets")) {
        cfg.presets = {"all"};
        break;
      }
      const json& p = doc.at("presets");
      if (p.is_string()) {
        cfg.presets = {p.get<std::string>()};
      } else if (p.is_array()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (!p[i].is_string()) throw ConfigError(child("/presets", i), "expected a preset name");
          cfg.presets.push_back(p[i].get<std::string>());
        }
      } else {
        throw ConfigError("/presets", "expected a preset name or an array of names");
      }
      break;
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("", "cannot open config file " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

namespace {

void replace_seeds(json& j, std::uint64_t seed) {
  if (j.is_object()) {
    if (j.contains("seed")) j["seed"] = seed;
    for (auto& [k, v] : j.items()) replace_seeds(v, seed);
  } else if (j.is_array()) {
    for (auto& v : j) replace_seeds(v, seed);
  }
}

}  // namespace

void override_seed(ExperimentConfig& cfg, std::uint64_t seed) {
  json doc = cfg.source;
  replace_seeds(doc, seed);
  if (cfg.command == Command::random_sim || cfg.command == Command::doublesum) doc["seed"] = seed;
  cfg = parse_config(doc);
}

}  // namespace dhankel::cli
