// solsta: scenario runner for fast bright-soliton compression protocols.
//
//   solsta run --scenario fig1..fig5|custom [--config cfg.json] --out dir [--workers K]
//   solsta design [--config cfg.json] --out dir
//   solsta propagate --protocol protocol.csv [--config cfg.json] --out dir
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solsta/config.hpp"
#include "solsta/scenarios.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

solsta::RunConfig load(const std::string& path) {
  return path.empty() ? solsta::parse_config("{}") : solsta::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse-engineered nonlinearity protocols for bright-soliton compression"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string scenario;
  std::string protocol_path;
  int workers = 1;

  auto* run = app.add_subcommand("run", "Reproduce one scenario end to end");
  run->add_option("--scenario", scenario, "fig1, fig2, fig3, fig4, fig5 or custom")->required();
  run->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--workers", workers, "Concurrent sweep rows (fig5)")->check(CLI::PositiveNumber);

  auto* design = app.add_subcommand("design", "Design an STA protocol for the configured switching parameters");
  design->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  design->add_option("--out", out_dir, "Output directory")->required();

  auto* prop = app.add_subcommand("propagate", "Propagate the GPE under a protocol CSV");
  prop->add_option("--protocol", protocol_path, "CSV with columns t,g")->required()->check(CLI::ExistingFile);
  prop->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  prop->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    auto cfg = load(config_path);
    cfg.output_dir = out_dir;
    solsta::ScenarioOutcome outcome;
    if (*run) {
      cfg.scenario = solsta::scenario_from_string(scenario);
      outcome = solsta::run_scenario(cfg, solsta::ScenarioOptions{workers});
    } else if (*design) {
      outcome = solsta::run_design(cfg);
    } else {
      outcome = solsta::run_propagate(cfg, protocol_path);
    }
    std::cout << outcome.summary_json << "\nmanifest: " << outcome.manifest.string() << "\n";
    return 0;
  } catch (const solsta::ConfigError& e) {
    std::cerr << "solsta: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const solsta::NumericalError& e) {
    std::cerr << "solsta: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "solsta: " << e.what() << "\n";
    return 1;
  }
}
