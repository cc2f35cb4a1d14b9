#pragma once

#include <filesystem>
#include <string>

#include "solsta/config.hpp"

namespace solsta {

struct ScenarioOptions {
  int workers = 1;  // fig5 rows run concurrently up to this many
};

struct ScenarioOutcome {
  std::filesystem::path manifest;
  std::string summary_json;
};

/// Runs cfg.scenario and writes its artifacts plus manifest.json into
/// cfg.output_dir. On failure every file written so far is removed.
///
///   fig1    switching protocol at (t_f, s) = (100, 1) and (10, 10):
///           variational and GPE runs against the adiabatic reference
///   fig2    STA design at (10, 10) against the adiabatic reference
///   fig3    STA designs for t_f in {0.1, 0.2, 10} at s t_f = 100
///   fig4    GPE validation of the fig2 design with an evolution table
///   fig5    fidelity sweep over cfg.sweep.a_s_values
///   custom  STA design for cfg.switching as given, validated by GPE
ScenarioOutcome run_scenario(const RunConfig& cfg, const ScenarioOptions& options = {});

/// STA protocol only (protocol.csv + protocol.json).
ScenarioOutcome run_design(const RunConfig& cfg);

/// GPE propagation under a protocol CSV with at least columns t,g. When the
/// design columns are present the initial and target states come from its
/// first and last rows, otherwise from the adiabatic reference of
/// cfg.switching stretched to the protocol duration.
ScenarioOutcome run_propagate(const RunConfig& cfg, const std::filesystem::path& protocol_csv);

}  // namespace solsta
