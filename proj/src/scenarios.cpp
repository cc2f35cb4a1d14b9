#include "solsta/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "solsta/analysis.hpp"
#include "solsta/io.hpp"
#include "solsta/sta.hpp"
#include "solsta/variational.hpp"

namespace solsta {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCsvRows = 10001;
constexpr std::size_t kEvolutionSlices = 200;
constexpr std::size_t kEvolutionSpacePoints = 1024;

constexpr Branch kStaBranch{10.0, 10.0};
constexpr Branch kAdiabaticBranch{100.0, 1.0};
constexpr Branch kNonAdiabaticBranch{10.0, 10.0};

std::size_t stride_for(std::size_t n) { return std::max<std::size_t>(1, (n + kMaxCsvRows - 2) / (kMaxCsvRows - 1)); }

SwitchingParams with_branch(SwitchingParams p, Branch b) {
  p.t_f = b.t_f;
  p.s_rate = b.s_rate;
  return p;
}

std::size_t gpe_steps(double t_f, double dt) { return static_cast<std::size_t>(std::ceil(t_f / dt - 1e-9)); }

PropagationOptions gpe_options(const RunConfig& cfg, double t_f) {
  PropagationOptions opt;
  opt.dt = cfg.grid.dt_for(t_f);
  opt.observe_every = cfg.numerics.observe_every;
  opt.corrector_passes = cfg.numerics.corrector_passes;
  return opt;
}

// Midpoint-aligned samples of the switching function for a GPE run.
ProtocolCurve gpe_switching(const SwitchingParams& p, double dt) {
  return switching_protocol(p, 2 * gpe_steps(p.t_f, dt) + 1);
}

json gpe_summary(const PropagationResult& r, const WaveFunction& initial) {
  const auto& last = r.observations.back();
  json j;
  j["steps"] = r.steps;
  j["dt"] = r.dt;
  j["initial_peak_density"] = kernels::max_density(ExecPolicy::serial, initial.values);
  j["final_peak_density"] = last.peak_density;
  j["final_width"] = last.width;
  j["fidelity"] = last.fidelity.value_or(std::nan(""));
  j["max_norm_drift"] = r.max_norm_drift;
  j["max_boundary_ratio"] = r.max_boundary_ratio;
  j["box_too_small"] = r.box_too_small;
  return j;
}

void write_gpe_outputs(ArtifactWriter& out, const std::string& prefix, const PropagationResult& r,
                       const WaveFunction& initial, const WaveFunction& target) {
  out.write(prefix + "_timeseries.csv", timeseries_csv(r.observations));
  out.write(snapshot_name(prefix + "_initial", initial.time), snapshot_csv(initial));
  out.write(snapshot_name(prefix + "_final", r.final_state.time), snapshot_csv(r.final_state));
  out.write(snapshot_name(prefix + "_target", r.final_state.time), snapshot_csv(target));
  if (r.evolution) out.write(prefix + "_evolution.csv", evolution_csv(*r.evolution));
}

json run_switching_branch(ArtifactWriter& out, const RunConfig& cfg, const std::string& name, Branch branch) {
  const auto config = cfg.physical();
  const auto p = with_branch(cfg.switching, branch);
  const std::size_t n = cfg.numerics.ode_steps;

  const auto r0 = ac_at(0.0, p, config, cfg.method);
  const auto rf = ac_at(p.t_f, p, config, cfg.method);
  const auto g_ode = switching_protocol(p, 2 * n + 1);
  const auto full = integrate_full(g_ode, SolitonState{r0.a, r0.adot / (2.0 * r0.a), 0.0, 0.0, 0.0}, config, n);
  const auto ref = ac_trajectory(p, config, n + 1, cfg.method);
  out.write("fig1_" + name + "_variational.csv", trajectory_csv(full, config, stride_for(n + 1)));
  out.write("fig1_" + name + "_reference.csv", trajectory_csv(ref, g_ode, stride_for(n + 1)));

  double max_dev = 0.0;
  for (std::size_t i = 0; i <= n; ++i)
    max_dev = std::max(max_dev, std::abs(full.states[i].a - ref.a[i]) / ref.a[i]);

  const auto grid = cfg.grid.grid_for(p.t_f);
  const auto psi0 = sech_state(r0.a, r0.adot, config.n_norm, grid);
  const auto target = sech_state(rf.a, rf.adot, config.n_norm, grid);
  auto opt = gpe_options(cfg, p.t_f);
  opt.target = target;
  const auto r = propagate(psi0, gpe_switching(p, opt.dt), config, p.t_f, opt);
  write_gpe_outputs(out, "fig1_" + name + "_gpe", r, psi0, target);

  json j;
  j["t_f"] = p.t_f;
  j["s_rate"] = p.s_rate;
  j["a_final"] = full.states.back().a;
  j["ac_final"] = rf.a;
  j["final_relative_deviation"] = std::abs(full.states.back().a - rf.a) / rf.a;
  j["max_relative_deviation"] = max_dev;
  j["gpe"] = gpe_summary(r, psi0);
  return j;
}

json design_summary(const DesignResult& d, const SwitchingParams& p) {
  const auto [g0, gf] = g_edges(p);
  json j;
  j["t_f"] = p.t_f;
  j["s_rate"] = p.s_rate;
  j["min_g"] = d.min_g;
  j["max_g"] = d.max_g;
  j["sign_change"] = d.sign_change;
  j["g_start"] = d.protocol.values().front();
  j["g_end"] = d.protocol.values().back();
  j["g_edges"] = {g0, gf};
  j["a_start"] = d.bc.a0;
  j["a_end"] = d.bc.af;
  return j;
}

void write_design(ArtifactWriter& out, const std::string& prefix, const DesignResult& d, const SwitchingParams& p,
                  ReferenceMethod method) {
  out.write(prefix + ".csv", protocol_csv(d, stride_for(d.protocol.size())));
  out.write(prefix + ".json", protocol_sidecar_json(d, p, method));
}

// Feeds a design back through the width equation.
double closure_error(const DesignResult& d, const PhysicalConfig& config, std::size_t n_steps) {
  const auto w = integrate_width(d.protocol, d.bc.a0, d.bc.adot0, config, n_steps);
  double e = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double a_design = d.trajectory.quintic->value(w.t[i]);
    e = std::max(e, std::abs(w.a[i] - a_design) / a_design);
  }
  return e;
}

json run_fig1(ArtifactWriter& out, const RunConfig& cfg) {
  json j;
  j["adiabatic"] = run_switching_branch(out, cfg, "adiabatic", kAdiabaticBranch);
  j["nonadiabatic"] = run_switching_branch(out, cfg, "nonadiabatic", kNonAdiabaticBranch);
  return j;
}

json run_fig2(ArtifactWriter& out, const RunConfig& cfg) {
  const auto config = cfg.physical();
  const auto p = with_branch(cfg.switching, kStaBranch);
  const auto d = design_protocol(p, config, cfg.method, cfg.numerics.design_samples);
  write_design(out, "fig2_protocol", d, p, cfg.method);
  const auto g_switch = switching_protocol(p, 2 * cfg.numerics.ode_steps + 1);
  const auto ref = ac_trajectory(p, config, cfg.numerics.design_samples, cfg.method);
  out.write("fig2_reference.csv", trajectory_csv(ref, g_switch, stride_for(ref.size())));
  const auto w = integrate_width(d.protocol, d.bc.a0, d.bc.adot0, config, cfg.numerics.ode_steps);
  out.write("fig2_variational.csv", trajectory_csv(w, d.protocol, stride_for(w.size())));

  json j = design_summary(d, p);
  j["closure_max_relative_error"] = closure_error(d, config, cfg.numerics.ode_steps);
  return j;
}

json run_fig3(ArtifactWriter& out, const RunConfig& cfg) {
  const auto config = cfg.physical();
  json rows = json::array();
  for (double t_f : {0.1, 0.2, 10.0}) {
    const auto p = with_branch(cfg.switching, Branch{t_f, 100.0 / t_f});
    const auto d = design_protocol(p, config, cfg.method, cfg.numerics.design_samples);
    char name[32];
    std::snprintf(name, sizeof name, "fig3_protocol_tf%g", t_f);
    write_design(out, name, d, p, cfg.method);
    rows.push_back(design_summary(d, p));
  }
  out.write("fig3_report.json", rows.dump(2) + "\n");
  json j;
  j["designs"] = rows;
  return j;
}

json run_sta_validation(ArtifactWriter& out, const RunConfig& cfg, const SwitchingParams& p,
                        const std::string& prefix) {
  const auto config = cfg.physical();
  const auto d = design_protocol(p, config, cfg.method, cfg.numerics.design_samples);
  write_design(out, prefix + "_protocol", d, p, cfg.method);

  const auto grid = cfg.grid.grid_for(p.t_f);
  const auto psi0 = sech_state(d.bc.a0, d.bc.adot0, config.n_norm, grid);
  const auto target = sech_state(d.bc.af, d.bc.adotf, config.n_norm, grid);
  auto opt = gpe_options(cfg, p.t_f);
  opt.target = target;
  opt.evolution_time_slices = kEvolutionSlices;
  opt.evolution_space_points = kEvolutionSpacePoints;
  const auto r = propagate(psi0, d.protocol, config, p.t_f, opt);
  write_gpe_outputs(out, prefix + "_gpe", r, psi0, target);

  json j = design_summary(d, p);
  j["target_width"] = d.bc.af;
  j["gpe"] = gpe_summary(r, psi0);
  return j;
}

json run_fig5(ArtifactWriter& out, const RunConfig& cfg, const ScenarioOptions& so) {
  const auto config = cfg.physical();
  SweepOptions opt;
  opt.sta_dt = cfg.grid.dt_for(kStaBranch.t_f);
  opt.adiabatic_dt = cfg.grid.dt_for(kAdiabaticBranch.t_f);
  opt.design_samples = cfg.numerics.design_samples;
  opt.method = cfg.method;
  opt.workers = so.workers;
  const auto grid = cfg.grid.grid_for(kStaBranch.t_f);
  const auto sweep = sweep_fidelity(cfg.sweep.a_s_values, cfg.switching, config, kStaBranch, kAdiabaticBranch, grid, opt);
  out.write("fig5_sweep.csv", sweep_csv(sweep));
  json rows = json::array();
  for (const auto& r : sweep.rows)
    rows.push_back({{"A_s", r.a_s_amp}, {"F_sta", r.fidelity_sta}, {"F_adiabatic", r.fidelity_adiabatic},
                    {"sta_feasible", r.sta_feasible}});
  json j;
  j["rows"] = rows;
  j["sta_branch"] = {{"t_f", kStaBranch.t_f}, {"s_rate", kStaBranch.s_rate}};
  j["adiabatic_branch"] = {{"t_f", kAdiabaticBranch.t_f}, {"s_rate", kAdiabaticBranch.s_rate}};
  return j;
}

template <class Body>
ScenarioOutcome with_writer(const RunConfig& cfg, const std::string& name, Body&& body) {
  cfg.validate();
  ArtifactWriter out(cfg.output_dir);
  out.write("config.json", to_json_text(cfg) + "\n");
  const json summary = body(out);
  out.commit(name, summary.dump());
  return {out.dir() / "manifest.json", summary.dump(2)};
}

}  // namespace

ScenarioOutcome run_scenario(const RunConfig& cfg, const ScenarioOptions& options) {
  return with_writer(cfg, to_string(cfg.scenario), [&](ArtifactWriter& out) -> json {
    switch (cfg.scenario) {
      case Scenario::fig1: return run_fig1(out, cfg);
      case Scenario::fig2: return run_fig2(out, cfg);
      case Scenario::fig3: return run_fig3(out, cfg);
      case Scenario::fig4: return run_sta_validation(out, cfg, with_branch(cfg.switching, kStaBranch), "fig4");
      case Scenario::fig5: return run_fig5(out, cfg, options);
      case Scenario::custom: return run_sta_validation(out, cfg, cfg.switching, "custom");
    }
    throw ConfigError("unknown scenario");
  });
}

ScenarioOutcome run_design(const RunConfig& cfg) {
  return with_writer(cfg, "design", [&](ArtifactWriter& out) -> json {
    const auto config = cfg.physical();
    const auto d = design_protocol(cfg.switching, config, cfg.method, cfg.numerics.design_samples);
    write_design(out, "protocol", d, cfg.switching, cfg.method);
    return design_summary(d, cfg.switching);
  });
}

ScenarioOutcome run_propagate(const RunConfig& cfg, const std::filesystem::path& protocol_csv_path) {
  const auto table = read_csv(protocol_csv_path);
  const auto g = ProtocolCurve::from_samples(table.column("t"), table.column("g"), Provenance::loaded);
  return with_writer(cfg, "propagate", [&](ArtifactWriter& out) -> json {
    const auto config = cfg.physical();
    const double t_f = g.t_final();
    double a0 = 0.0, adot0 = 0.0, af = 0.0, adotf = 0.0;
    if (table.has("a_design") && table.has("adot_design")) {
      a0 = table.column("a_design").front();
      adot0 = table.column("adot_design").front();
      af = table.column("a_design").back();
      adotf = table.column("adot_design").back();
    } else {
      auto p = cfg.switching;
      p.t_f = t_f;
      const auto r0 = ac_at(0.0, p, config, cfg.method);
      const auto rf = ac_at(t_f, p, config, cfg.method);
      a0 = r0.a;
      adot0 = r0.adot;
      af = rf.a;
      adotf = rf.adot;
    }
    const auto grid = cfg.grid.grid_for(t_f);
    const auto psi0 = sech_state(a0, adot0, config.n_norm, grid);
    const auto target = sech_state(af, adotf, config.n_norm, grid);
    auto opt = gpe_options(cfg, t_f);
    opt.target = target;
    const auto r = propagate(psi0, g, config, t_f, opt);
    write_gpe_outputs(out, "propagate", r, psi0, target);
    json j = gpe_summary(r, psi0);
    j["t_f"] = t_f;
    j["target_width"] = af;
    return j;
  });
}

}  // namespace solsta
