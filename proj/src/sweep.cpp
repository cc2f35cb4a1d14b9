#include <algorithm>
#include <cmath>
#include <exception>

#include "solsta/analysis.hpp"
#include "solsta/sta.hpp"

namespace solsta {

namespace {

std::size_t steps_for(double t_f, double dt) {
  return static_cast<std::size_t>(std::ceil(t_f / dt - 1e-9));
}

double run_branch(const WaveFunction& initial, const WaveFunction& target, const ProtocolCurve& g,
                  const PhysicalConfig& config, double t_f, double dt, ExecPolicy policy) {
  PropagationOptions opt;
  opt.dt = dt;
  opt.observe_every = steps_for(t_f, dt);
  opt.policy = policy;
  const auto r = propagate(initial, g, config, t_f, opt);
  return fidelity(r.final_state, target, policy);
}

SweepRow run_row(double a_s, const SwitchingParams& base, const PhysicalConfig& config, Branch sta_branch,
                 Branch ad_branch, const Grid1D& grid, const SweepOptions& opt, ExecPolicy policy) {
  SweepRow row;
  row.a_s_amp = a_s;

  SwitchingParams ps = base;
  ps.a_s_amp = a_s;
  ps.t_f = sta_branch.t_f;
  ps.s_rate = sta_branch.s_rate;
  try {
    const auto design = design_protocol(ps, config, opt.method, opt.design_samples);
    row.sta_feasible = !design.sign_change;
    const auto psi0 = sech_state(design.bc.a0, design.bc.adot0, config.n_norm, grid);
    const auto target = sech_state(design.bc.af, design.bc.adotf, config.n_norm, grid);
    row.fidelity_sta = run_branch(psi0, target, design.protocol, config, ps.t_f, opt.sta_dt, policy);
  } catch (const InfeasibleTrajectoryError&) {
    row.sta_feasible = false;
    row.fidelity_sta = 0.0;
  }

  SwitchingParams pa = base;
  pa.a_s_amp = a_s;
  pa.t_f = ad_branch.t_f;
  pa.s_rate = ad_branch.s_rate;
  const auto r0 = ac_at(0.0, pa, config, opt.method);
  const auto rf = ac_at(pa.t_f, pa, config, opt.method);
  const auto psi0 = sech_state(r0.a, r0.adot, config.n_norm, grid);
  const auto target = sech_state(rf.a, rf.adot, config.n_norm, grid);
  // Knots at every half step so midpoint evaluations hit samples exactly.
  const auto g = switching_protocol(pa, 2 * steps_for(pa.t_f, opt.adiabatic_dt) + 1);
  row.fidelity_adiabatic = run_branch(psi0, target, g, config, pa.t_f, opt.adiabatic_dt, policy);
  return row;
}

}  // namespace

std::vector<double> default_sweep_amplitudes() {
  std::vector<double> v;
  for (int k = 1; k <= 20; ++k) v.push_back(static_cast<double>(k));
  return v;
}

SweepResult sweep_fidelity(const std::vector<double>& a_s_values, const SwitchingParams& base,
                           const PhysicalConfig& config, Branch sta_branch, Branch adiabatic_branch,
                           const Grid1D& grid, const SweepOptions& opt) {
  if (a_s_values.empty()) throw ConfigError("sweep: no A_s values");
  for (double v : a_s_values)
    if (!(v > 0.0)) throw ConfigError("sweep: A_s values must be positive");
  config.validate();

  std::vector<double> values = a_s_values;
  std::sort(values.begin(), values.end());

  SweepResult out;
  out.sta_branch = sta_branch;
  out.adiabatic_branch = adiabatic_branch;
  out.rows.resize(values.size());

  const int workers = std::max(1, opt.workers);
  const ExecPolicy inner = workers > 1 ? ExecPolicy::serial : ExecPolicy::parallel;
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  std::exception_ptr failure;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out.rows[static_cast<std::size_t>(i)] =
          run_row(values[static_cast<std::size_t>(i)], base, config, sta_branch, adiabatic_branch, grid, opt, inner);
    } catch (...) {
#pragma omp critical(solsta_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace solsta
