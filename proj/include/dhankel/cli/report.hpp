#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dhankel/cli/config.hpp"

namespace dhankel::cli {

struct CurvePoint {
  double x = 0.0;
  double lower = 0.0;
  double mid = 0.0;
  double upper = 0.0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct Curve {
  std::string label;
  std::vector<CurvePoint> points;

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Provenance {
  std::string tool_version;
  std::string timestamp;
  double wall_time = 0.0;  ///< seconds
  json seed;               ///< null when the command is deterministic

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Report {
  std::string command;
  json config;
  json results;
  std::vector<Curve> curves;
  Provenance provenance;
  bool passed = true;  ///< false when a demo check failed

  friend bool operator==(const Report&, const Report&) = default;
};

/// Non-finite doubles are written as the strings "inf", "-inf", "nan".
json number(double v);
double number_from(const json& j);

json to_json(const Report& r);
Report report_from_json(const json& j);

enum class Format { json, csv };
Format format_from_string(std::string_view s);

/// json: report.json; csv: one <label>.csv per curve (x,lower,mid,upper) plus
/// summary.csv (flattened results). Throws std::runtime_error if a file cannot be written.
std::vector<std::filesystem::path> write_report(const Report& r, Format f, const std::filesystem::path& dir);

/// CSV text for one curve.
std::string curve_csv(const Curve& c);

}  // namespace dhankel::cli
