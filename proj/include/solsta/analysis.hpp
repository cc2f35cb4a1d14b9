#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "solsta/adiabatic.hpp"
#include "solsta/gpe.hpp"
#include "solsta/types.hpp"

namespace solsta {

double norm(const WaveFunction& psi, ExecPolicy policy = ExecPolicy::serial);

/// Width from the second moment of the density: sqrt(12 <(x - <x>)^2>) / pi,
/// exact for a sech^2 density profile.
double width_second_moment(const WaveFunction& psi, ExecPolicy policy = ExecPolicy::serial);

double center_of_mass(const WaveFunction& psi, ExecPolicy policy = ExecPolicy::serial);

/// |<target|psi>|^2 / (norm(target) norm(psi)).
double fidelity(const WaveFunction& psi, const WaveFunction& target, ExecPolicy policy = ExecPolicy::serial);

struct Branch {
  double t_f = 0.0;
  double s_rate = 0.0;
};

struct SweepRow {
  double a_s_amp = 0.0;
  double fidelity_sta = 0.0;
  double fidelity_adiabatic = 0.0;
  bool sta_feasible = true;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending in a_s_amp
  Branch sta_branch;
  Branch adiabatic_branch;
};

struct SweepOptions {
  double sta_dt = 1e-4;
  double adiabatic_dt = 1e-3;
  std::size_t design_samples = 20001;
  ReferenceMethod method = ReferenceMethod::perturbative;
  int workers = 1;
};

/// For each A_s: the target is the sech state at a_c(t_f), adot_c(t_f) of the
/// adiabatic branch; the STA-designed protocol and the switching protocol
/// are propagated from their respective initial states and compared to it.
SweepResult sweep_fidelity(const std::vector<double>& a_s_values, const SwitchingParams& base,
                           const PhysicalConfig& config, Branch sta_branch, Branch adiabatic_branch,
                           const Grid1D& grid, const SweepOptions& options = {});

std::vector<double> default_sweep_amplitudes();

}  // namespace solsta
