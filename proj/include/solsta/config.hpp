#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solsta/adiabatic.hpp"
#include "solsta/gpe.hpp"
#include "solsta/types.hpp"

namespace solsta {

enum class Scenario { fig1, fig2, fig3, fig4, fig5, custom };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

struct GridConfig {
  double x_half_width = 40.0;
  std::size_t n_points = 8192;
  std::optional<double> dt;  // unset: 1e-4 for t_f <= 10, 1e-3 above

  double dt_for(double t_f) const;
  Grid1D grid_for(double t_f) const;
};

struct NumericsConfig {
  std::size_t ode_steps = 100000;
  std::size_t design_samples = 20001;
  std::size_t observe_every = 100;
  int corrector_passes = CrankNicolson::kDefaultCorrectorPasses;
};

struct SweepConfig {
  std::vector<double> a_s_values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
};

/// Everything a scenario run needs. Defaults are the slow-switching case
/// parameters (A_s = 10, s = 1, omega = 0.04, N = 1, t_f = 100).
struct RunConfig {
  double omega = 0.04;
  double n_norm = 1.0;
  SwitchingParams switching;
  GridConfig grid;
  NumericsConfig numerics;
  SweepConfig sweep;
  Scenario scenario = Scenario::fig1;
  ReferenceMethod method = ReferenceMethod::perturbative;
  std::string output_dir = "out";

  PhysicalConfig physical() const;
  void validate() const;

  bool operator==(const RunConfig& other) const;
};

/// Strict JSON parsing: unknown keys and invariant violations raise
/// ParseError naming the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string to_json_text(const RunConfig& cfg);

}  // namespace solsta
