#include "dhankel/cli/report.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dhankel::cli {

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw std::invalid_argument("report: expected a number");
}

json to_json(const Report& r) {
  json curves = json::array();
  for (const auto& c : r.curves) {
    json pts = json::array();
    for (const auto& p : c.points) pts.push_back({number(p.x), number(p.lower), number(p.mid), number(p.upper)});
    curves.push_back({{"label", c.label}, {"columns", {"x", "lower", "mid", "upper"}}, {"points", std::move(pts)}});
  }
  return {{"command", r.command},
          {"passed", r.passed},
          {"config", r.config},
          {"results", r.results},
          {"curves", std::move(curves)},
          {"provenance",
           {{"tool_version", r.provenance.tool_version},
            {"timestamp", r.provenance.timestamp},
            {"wall_time", r.provenance.wall_time},
            {"seed", r.provenance.seed}}}};
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.config = j.at("config");
  r.results = j.at("results");
  for (const auto& c : j.at("curves")) {
    Curve curve;
    curve.label = c.at("label").get<std::string>();
    for (const auto& p : c.at("points"))
      curve.points.push_back({number_from(p.at(0)), number_from(p.at(1)), number_from(p.at(2)), number_from(p.at(3))});
    r.curves.push_back(std::move(curve));
  }
  const json& pv = j.at("provenance");
  r.provenance.tool_version = pv.at("tool_version").get<std::string>();
  r.provenance.timestamp = pv.at("timestamp").get<std::string>();
  r.provenance.wall_time = pv.at("wall_time").get<double>();
  r.provenance.seed = pv.at("seed");
  return r;
}

Format format_from_string(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("format must be json or csv");
}

namespace {

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string file_stem(const std::string& label) {
  std::string s;
  for (char c : label) s += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
  return s.empty() ? "curve" : s;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace

std::string curve_csv(const Curve& c) {
  std::string s = "x,lower,mid,upper\n";
  for (const auto& p : c.points)
    s += csv_number(p.x) + "," + csv_number(p.lower) + "," + csv_number(p.mid) + "," + csv_number(p.upper) + "\n";
  return s;
}

std::vector<std::filesystem::path> write_report(const Report& r, Format f, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::vector<std::filesystem::path> files;
  if (f == Format::json) {
    files.push_back(dir / "report.json");
    write_file(files.back(), to_json(r).dump(2) + "\n");
    return files;
  }
  for (const auto& c : r.curves) {
    files.push_back(dir / (file_stem(c.label) + ".csv"));
    write_file(files.back(), curve_csv(c));
  }
  std::vector<std::pair<std::string, json>> rows;
  flatten(r.results, "", rows);
  rows.emplace_back("passed", r.passed);
  rows.emplace_back("provenance.tool_version", r.provenance.tool_version);
  rows.emplace_back("provenance.seed", r.provenance.seed);
  std::string s = "key,value\n";
  for (const auto& [k, v] : rows) s += csv_field(k) + "," + csv_field(v) + "\n";
  files.push_back(dir / "summary.csv");
  write_file(files.back(), s);
  return files;
}

}  // namespace dhankel::cli
