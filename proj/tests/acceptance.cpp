// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--full-sweep] [--workers K]
//
// The sweep uses A_s in {2, 6, 10, 14, 18} unless --full-sweep asks for 1..20.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "solsta/adiabatic.hpp"
#include "solsta/analysis.hpp"
#include "solsta/gpe.hpp"
#include "solsta/sta.hpp"
#include "solsta/variational.hpp"

using namespace solsta;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail, double seconds) {
  if (!ok) ++failures;
  std::printf("%s  %-28s %s  [%.1f s]\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SwitchingParams branch(double t_f, double s) {
  SwitchingParams p;
  p.t_f = t_f;
  p.s_rate = s;
  return p;
}

const PhysicalConfig kCfg{};
constexpr std::size_t kSteps = kDefaultOdeSteps;

void adiabatic_reference_values() {
  Stopwatch sw;
  const auto [g0, gf] = g_edges(SwitchingParams{});
  const double a0 = ac_perturbative(g0, kCfg), af = ac_perturbative(gf, kCfg);
  const bool ok = std::abs(a0 - 0.494) <= 0.001 && std::abs(af - 0.0834) <= 0.0005;
  report(ok, "adiabatic-reference", fmt("a_c(0)=%.6f (0.494+-0.001) a_c(t_f)=%.6f (0.0834+-0.0005)", a0, af),
         sw.seconds());
}

double tracking(const SwitchingParams& p, bool end_only) {
  const auto r0 = ac_at(0.0, p, kCfg, ReferenceMethod::perturbative);
  const auto w = integrate_width(switching_protocol(p, 2 * kSteps + 1), r0.a, r0.adot, kCfg, kSteps);
  double e = 0.0;
  for (std::size_t i = end_only ? w.size() - 1 : 0; i < w.size(); ++i) {
    const double ac = ac_perturbative(switching_g(w.t[i], p), kCfg);
    e = std::max(e, std::abs(w.a[i] - ac) / ac);
  }
  return e;
}

void adiabatic_tracking() {
  Stopwatch sw;
  const double e = tracking(branch(100.0, 1.0), false);
  report(e < 0.02, "adiabatic-tracking", fmt("max |a-a_c|/a_c = %.4f (< 0.02)", e), sw.seconds());
}

void nonadiabatic_failure() {
  Stopwatch sw;
  const double e = tracking(branch(10.0, 10.0), true);
  report(e > 0.10, "nonadiabatic-failure", fmt("|a(t_f)-a_c|/a_c = %.4f (> 0.10)", e), sw.seconds());
}

void sta_closure() {
  Stopwatch sw;
  const auto p = branch(10.0, 10.0);
  const auto d = design_protocol(p, kCfg, ReferenceMethod::perturbative, 2 * kSteps + 1);
  const Quintic& q = *d.trajectory.quintic;
  const auto& bc = d.bc;
  const double res = std::max({std::abs(q.value(0) - bc.a0), std::abs(q.first(0) - bc.adot0),
                               std::abs(q.second(0) - bc.addot0), std::abs(q.value(p.t_f) - bc.af),
                               std::abs(q.first(p.t_f) - bc.adotf), std::abs(q.second(p.t_f) - bc.addotf)});
  const auto w = integrate_width(d.protocol, bc.a0, bc.adot0, kCfg, kSteps);
  double rel = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) rel = std::max(rel, std::abs(w.a[i] - q.value(w.t[i])) / q.value(w.t[i]));
  report(res < 1e-10 && rel < 1e-6, "sta-closure",
         fmt("bc residual %.2e (< 1e-10), replay max rel err %.2e (< 1e-6)", res, rel), sw.seconds());
}

void sta_endpoints() {
  Stopwatch sw;
  const auto p = branch(10.0, 10.0);
  const auto d = design_protocol(p, kCfg, ReferenceMethod::perturbative);
  const auto [g0, gf] = g_edges(p);
  const double e0 = std::abs(d.protocol.values().front() - g0) / g0;
  const double ef = std::abs(d.protocol.values().back() - gf) / gf;
  report(std::max(e0, ef) < 1e-3, "sta-endpoints",
         fmt("g(0) rel err %.2e, g(t_f) rel err %.2e (< 1e-3)", e0, ef), sw.seconds());
}

void feasibility() {
  Stopwatch sw;
  std::vector<DesignResult> d;
  for (double t_f : {0.1, 0.2, 10.0}) d.push_back(design_protocol(branch(t_f, 100.0 / t_f), kCfg, ReferenceMethod::perturbative));
  const bool ok = d[0].sign_change && !d[2].sign_change && d[2].min_g > 0.0 && d[0].max_g > d[1].max_g &&
                  d[1].max_g > d[2].max_g;
  report(ok, "feasibility-regimes",
         fmt("min g: %.3g / %.3g / %.3g, max g: %.4g / %.4g / %.4g (t_f = 0.1 / 0.2 / 10)", d[0].min_g, d[1].min_g,
             d[2].min_g, d[0].max_g, d[1].max_g, d[2].max_g),
         sw.seconds());
}

void gpe_sta() {
  Stopwatch sw;
  const auto p = branch(10.0, 10.0);
  const auto d = design_protocol(p, kCfg, ReferenceMethod::perturbative, 20001);
  const Grid1D grid = build_grid(40.0, 8192, 1e-4);
  const auto psi0 = sech_state(d.bc.a0, d.bc.adot0, kCfg.n_norm, grid);
  PropagationOptions opt;
  opt.dt = 1e-4;
  opt.target = sech_state(d.bc.af, d.bc.adotf, kCfg.n_norm, grid);
  const auto r = propagate(psi0, d.protocol, kCfg, p.t_f, opt);
  const double f = fidelity(r.final_state, *opt.target);
  const double w = r.observations.back().width;
  const bool ok = f >= 0.99 && std::abs(w - 0.0834) <= 0.05 * 0.0834 && r.max_norm_drift < 1e-6;
  report(ok, "gpe-sta", fmt("F=%.6f (>= 0.99) width=%.5f (0.0834+-5%%) drift=%.1e (< 1e-6)", f, w, r.max_norm_drift),
         sw.seconds());
}

void gpe_adiabatic() {
  Stopwatch sw;
  const auto p = branch(100.0, 1.0);
  const Grid1D grid = build_grid(40.0, 8192, 1e-3);
  const auto r0 = ac_at(0.0, p, kCfg, ReferenceMethod::perturbative);
  const auto rf = ac_at(p.t_f, p, kCfg, ReferenceMethod::perturbative);
  PropagationOptions opt;
  opt.dt = 1e-3;
  opt.observe_every = 1000;
  opt.target = sech_state(rf.a, rf.adot, kCfg.n_norm, grid);
  const auto r = propagate(sech_state(r0.a, r0.adot, kCfg.n_norm, grid), switching_protocol(p, 200001), kCfg, p.t_f, opt);
  const double f = fidelity(r.final_state, *opt.target);
  report(f > 0.90, "gpe-adiabatic", fmt("F=%.6f (> 0.90)", f), sw.seconds());
}

void sweep(bool full, int workers) {
  Stopwatch sw;
  const std::vector<double> values = full ? default_sweep_amplitudes() : std::vector<double>{2, 6, 10, 14, 18};
  SweepOptions opt;
  opt.workers = workers;
  const auto r = sweep_fidelity(values, SwitchingParams{}, kCfg, Branch{10.0, 10.0}, Branch{100.0, 1.0},
                                build_grid(40.0, 8192, 1e-4), opt);
  double min_sta = 1.0, min_ad = 1.0;
  std::vector<double> ad;
  std::string rows;
  for (const auto& row : r.rows) {
    min_sta = std::min(min_sta, row.sta_feasible ? row.fidelity_sta : 0.0);
    min_ad = std::min(min_ad, row.fidelity_adiabatic);
    ad.push_back(row.fidelity_adiabatic);
    rows += fmt(" %g:%.6f/%.6f", row.a_s_amp, row.fidelity_sta, row.fidelity_adiabatic);
  }
  const bool monotone = std::is_sorted(ad.begin(), ad.end()) || std::is_sorted(ad.rbegin(), ad.rend());
  const bool ok = min_sta >= 0.99 && min_ad >= 0.90 && !monotone;
  report(ok, full ? "sweep-shape (20 rows)" : "sweep-shape (5-row smoke)",
         fmt("min F_sta=%.6f (>= 0.99) min F_ad=%.6f (>= 0.90) adiabatic %s; A_s:F_sta/F_ad%s", min_sta, min_ad,
             monotone ? "monotone" : "non-monotone", rows.c_str()),
         sw.seconds());
}

double quartic(double a, double g, const PhysicalConfig& c) {
  return kPi * kPi * c.omega * c.omega * std::pow(a, 4) + g * c.n_norm * a - 1.0;
}

void oracle_equivalences() {
  Stopwatch sw;
  double residual = 0.0, bisection = 0.0;
  for (double g : {0.5, 2.0, 12.0, 40.0}) {
    const double a = ac_exact(g, kCfg);
    residual = std::max(residual, std::abs(quartic(a, g, kCfg)));
    double lo = 0.0, hi = 1.0 / g;
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      (quartic(mid, g, kCfg) < 0.0 ? lo : hi) = mid;
    }
    bisection = std::max(bisection, std::abs(a - 0.5 * (lo + hi)));
  }

  const Grid1D grid = build_grid(40.0, 8192, 1e-4);
  double width_err = 0.0, self_fid = 0.0;
  for (double a : {0.0834, 0.2, 0.494, 1.5}) {
    const auto psi = sech_state(a, 0.0, 1.0, grid);
    width_err = std::max(width_err, std::abs(width_second_moment(psi) - a) / a);
    self_fid = std::max(self_fid, std::abs(fidelity(psi, psi) - 1.0));
  }

  const Grid1D small = build_grid(20.0, 2048, 1e-3);
  auto psi = sech_state(0.5, 0.1, 1.0, small);
  const double n0 = norm(psi);
  CrankNicolson cn(small, kCfg);
  for (int k = 0; k < 2000; ++k) cn.step(psi, 4.0, 1e-3, k * 1e-3);
  const double drift = std::abs(norm(psi) - n0) / n0;

  const auto g = ProtocolCurve::constant(2.0, 20.0);
  const double ref = integrate_width(g, 0.45, 0.0, kCfg, 400000).a.back();
  const double e1 = std::abs(integrate_width(g, 0.45, 0.0, kCfg, 2000).a.back() - ref);
  const double e2 = std::abs(integrate_width(g, 0.45, 0.0, kCfg, 4000).a.back() - ref);
  const double ratio = e1 / e2;

  const bool ok = residual < 1e-12 && bisection < 1e-10 && width_err < 0.01 && self_fid < 1e-12 && drift < 1e-6 &&
                  ratio >= 12.0 && ratio <= 20.0;
  report(ok, "oracle-equivalences",
         fmt("quartic %.1e bisect %.1e width %.1e self-F %.1e CN drift %.1e RK4 ratio %.2f", residual, bisection,
             width_err, self_fid, drift, ratio),
         sw.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  bool full_sweep = false;
  int workers = 1;
  app.add_flag("--full-sweep", full_sweep, "Sweep A_s = 1..20 instead of five rows");
  app.add_option("--workers", workers, "Concurrent sweep rows")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const auto guard = [](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(false, name, std::string("threw: ") + e.what(), 0.0);
    }
  };
  guard("adiabatic-reference", adiabatic_reference_values);
  guard("adiabatic-tracking", adiabatic_tracking);
  guard("nonadiabatic-failure", nonadiabatic_failure);
  guard("sta-closure", sta_closure);
  guard("sta-endpoints", sta_endpoints);
  guard("feasibility-regimes", feasibility);
  guard("oracle-equivalences", oracle_equivalences);
  guard("gpe-sta", gpe_sta);
  guard("gpe-adiabatic", gpe_adiabatic);
  guard("sweep-shape", [&] { sweep(full_sweep, workers); });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
