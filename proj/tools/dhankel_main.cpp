#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dhankel/cli/config.hpp"
#include "dhankel/cli/report.hpp"
#include "dhankel/cli/run.hpp"
#include "dhankel/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDemoFailed = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace dhankel::cli;

  CLI::App app{"Hankel- and Cesaro-type operators on the Dirichlet space"};
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string command, config_file, out_dir, format = "json";
  std::optional<std::uint64_t> seed;
  app.add_option("command", command, "classify | sections | rkt | moments | carleson | random-sim | doublesum | demo")
      ->required();
  app.add_option("--config", config_file, "JSON experiment configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (default: report on stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed-override", seed, "replace every seed in the configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kUsage;
  }

  try {
    nlohmann::ordered_json doc;
    {
      std::ifstream in(config_file);
      if (!in) throw ConfigError("", "cannot open " + config_file);
      try {
        doc = nlohmann::ordered_json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
      }
    }
    if (!doc.is_object()) throw ConfigError("/", "expected an object");
    if (!doc.contains("command")) doc["command"] = command;
    if (doc["command"] != command) {
      const auto& c = doc["command"];
      throw ConfigError("/command", "config is for '" + (c.is_string() ? c.get<std::string>() : c.dump()) +
                                        "', not '" + command + "'");
    }

    ExperimentConfig cfg = parse_config(doc);
    if (seed) override_seed(cfg, *seed);
    const Report report = run(cfg);

    if (cfg.command == Command::demo)
      for (const auto& row : report.results["presets"])
        std::cerr << (row["passed"].get<bool>() ? "PASS " : "FAIL ") << row["id"] << " " << row["name"].get<std::string>()
                  << " (" << row["seconds"].get<double>() << " s)\n";

    const Format f = format_from_string(format);
    if (out_dir.empty()) {
      if (f == Format::json) {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        for (const auto& c : report.curves) std::cout << "# " << c.label << "\n" << curve_csv(c);
      }
    } else {
      for (const auto& p : write_report(report, f, out_dir)) std::cerr << "wrote " << p.string() << "\n";
    }
    return report.passed ? kOk : kDemoFailed;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const dhankel::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  } catch (const dhankel::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
