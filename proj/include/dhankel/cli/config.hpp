#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhankel/carleson.hpp"
#include "dhankel/criteria.hpp"
#include "dhankel/measure.hpp"
#include "dhankel/operators.hpp"
#include "dhankel/rng.hpp"
#include "dhankel/symbol.hpp"

namespace dhankel::cli {

using json = nlohmann::ordered_json;

/// Invalid configuration; `path` names the offending field ("/symbol/alpha").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& msg)
      : std::runtime_error(path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

enum class Command { classify, sections, rkt, moments, carleson, random_sim, doublesum, demo };

std::string_view to_string(Command c) noexcept;

enum class Route { widom, carleson };

struct ExperimentConfig {
  Command command = Command::classify;
  json source;  ///< the parsed document, echoed into reports

  std::optional<SymbolSeq> symbol;
  std::optional<MeasureSpec> measure;
  OperatorKind kind = OperatorKind::hankel;
  SpaceTag weight = SpaceTag::dirichlet_section;
  Route route = Route::widom;

  std::size_t n = 256;
  std::vector<std::size_t> n_grid;
  std::vector<std::size_t> m_grid;
  std::vector<double> t_grid;
  std::vector<double> delta_grid;
  double tol = 1e-10;
  double kernel_tol = 1e-12;
  std::size_t moment_count = 32;

  ClassifyConfig classify;
  CarlesonConfig carleson;

  Distribution distribution = Distribution::rademacher;
  bool normalized = true;
  std::size_t replicas = 32;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;

  std::size_t vectors = 1000;
  std::size_t max_length = 512;
  std::vector<std::vector<double>> explicit_vectors;

  std::vector<std::string> presets;
};

SymbolSeq parse_symbol(const json& j, const std::string& path);
MeasureSpec parse_measure(const json& j, const std::string& path);

/// Validates and converts a config document. Throws ConfigError.
ExperimentConfig parse_config(const json& doc);

/// Reads and parses a JSON file. Throws ConfigError (path "") on I/O or syntax errors.
ExperimentConfig load_config(const std::filesystem::path& file);

/// Replaces every seed in the config (top level and nested randomized symbols).
void override_seed(ExperimentConfig& cfg, std::uint64_t seed);

}  // namespace dhankel::cli
