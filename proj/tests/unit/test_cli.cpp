#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dhankel/cli/config.hpp"
#include "dhankel/cli/presets.hpp"
#include "dhankel/cli/report.hpp"
#include "dhankel/cli/run.hpp"

using namespace dhankel;
using namespace dhankel::cli;

namespace {

std::string error_path(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<none>";
}

std::size_t line_count(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("config errors name the offending field") {
  CHECK(error_path(json::parse(R"({"command":"classify","symbol":{"type":"powerlog","alpha":"one","beta":1}})")) ==
        "/symbol/alpha");
  CHECK(error_path(json::parse(R"({"command":"classify"})")) == "/symbol");
  CHECK(error_path(json::parse(R"({"command":"frobnicate"})")) == "/command");
  CHECK(error_path(json::parse(R"({"command":"classify","symbol":{"type":"hilbert"},"colour":1})")) == "/colour");
  CHECK(error_path(json::parse(R"({"command":"classify","symbol":{"type":"hilbert"},"m_grid":[16,8]})")) == "/m_grid/1");
  CHECK(error_path(json::parse(R"({"command":"random-sim","symbol":{"type":"hilbert"},"m_grid":[1,2]})")) == "/seed");
  CHECK(error_path(json::parse(
            R"({"command":"moments","measure":{"atoms":[{"loc":1.5,"mass":1}]}})")) == "/measure/atoms/0/loc");
  CHECK(error_path(json::parse(R"({"command":"classify","symbol":{"type":"explicit","values":[1,[2]]}})")) ==
        "/symbol/values/1");
  CHECK(error_path(json::parse(R"({"command":"rkt","symbol":{"type":"hilbert"},"t_grid":[0.5,1.0]})")) == "/t_grid/1");
  CHECK(error_path(json::parse(R"([1,2])")) == "/");
}

TEST_CASE("config parsing") {
  const ExperimentConfig c = parse_config(json::parse(R"({
    "command": "random-sim",
    "symbol": {"type": "powerlog", "alpha": 1, "beta": 1.5},
    "distribution": "gaussian", "replicas": 4, "seed": 11, "n": 64, "m_grid": [0, 8, 32]
  })"));
  CHECK(c.command == Command::random_sim);
  CHECK(c.distribution == Distribution::gaussian);
  CHECK(c.replicas == 4);
  CHECK(*c.seed == 11);
  CHECK(c.m_grid == std::vector<std::size_t>{0, 8, 32});

  ExperimentConfig o = c;
  override_seed(o, 99);
  CHECK(*o.seed == 99);
  CHECK(o.source["seed"] == 99);

  const ExperimentConfig lac = parse_config(json::parse(
      R"({"command":"classify","symbol":{"type":"lacunary","q":2,"decay":0.5,"log_power":1}})"));
  CHECK(lac.symbol->kind() == SymbolKind::lacunary);
  CHECK(std::abs(lac.symbol->value(8) - 0.5 * std::sqrt(0.5) / 4.0) < 1e-15);
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.command = "sections";
  r.config = json::parse(R"({"command":"sections"})");
  r.results = {{"sigma", number(1.5)}, {"growth", number(INFINITY)}};
  r.curves.push_back({"c", {{1, 0.5, 1.0, 1.5}, {2, 0.0, -INFINITY, INFINITY}}});
  r.provenance = {"0.3.0", "2026-01-01T00:00:00Z", 0.25, json(7)};
  r.passed = false;
  const json j = to_json(r);
  CHECK(report_from_json(json::parse(j.dump())) == r);
  CHECK(number_from(number(-INFINITY)) == -INFINITY);
  CHECK(std::isnan(number_from(number(NAN))));
}

TEST_CASE("CSV output") {
  const auto dir = std::filesystem::temp_directory_path() / "dhankel_test_cli_csv";
  std::filesystem::remove_all(dir);
  Report r;
  r.command = "sections";
  r.results = {{"a", 1}, {"nested", {{"b", 2}}}};
  r.curves.push_back({"empty", {}});
  r.curves.push_back({"three", {{1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}}});
  const auto files = write_report(r, Format::csv, dir);
  CHECK(files.size() == 3);
  CHECK(line_count(dir / "empty.csv") == 1);
  CHECK(line_count(dir / "three.csv") == 4);
  CHECK(line_count(dir / "summary.csv") >= 3);
  CHECK(curve_csv({"x", {}}) == "x,lower,mid,upper\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("runs are deterministic apart from timing") {
  const ExperimentConfig c = parse_config(json::parse(R"({
    "command": "random-sim", "symbol": {"type": "powerlog", "alpha": 1, "beta": 1.5},
    "replicas": 3, "seed": 5, "n": 48, "m_grid": [0, 16]
  })"));
  Report a = run(c), b = run(c);
  a.provenance.timestamp = b.provenance.timestamp;
  a.provenance.wall_time = b.provenance.wall_time;
  CHECK(to_json(a) == to_json(b));
  CHECK(a.provenance.seed == json(5));
}

TEST_CASE("classify of a finite symbol") {
  const Report r = run(parse_config(
      json::parse(R"({"command":"classify","symbol":{"type":"explicit","values":[1,0.5,[0,0.25]]}})")));
  CHECK(r.results["verdict"] == "compact");
  // complex, non-monotone coefficients: the Widom route is only a heuristic for Hankel operators
  CHECK(r.results["applicability"] == "heuristic");
  CHECK_FALSE(r.curves.empty());
}

TEST_CASE("preset registry") {
  CHECK(presets().size() == 12);
  for (std::size_t i = 0; i < presets().size(); ++i) CHECK(presets()[i].id == int(i + 1));
  CHECK_THROWS_AS(run_preset("no-such-preset"), ConfigError);
  const PresetResult k = run_preset("kernel");
  CHECK(k.passed);
}
