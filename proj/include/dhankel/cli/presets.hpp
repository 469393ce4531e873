#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dhankel/cli/config.hpp"

namespace dhankel::cli {

struct PresetResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< seconds
  json details;
};

struct Preset {
  int id;
  std::string name;
  std::string summary;
  double time_limit;
  std::function<PresetResult()> run;
};

/// The acceptance battery, in criterion order.
const std::vector<Preset>& presets();

/// Runs one preset by name; throws ConfigError for unknown names.
PresetResult run_preset(const std::string& name);

}  // namespace dhankel::cli
