#include "solsta/gpe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solsta/analysis.hpp"

namespace solsta {

bool Grid1D::same_space(const Grid1D& o) const noexcept {
  const double tol = 1e-12 * std::max(1.0, std::abs(x_max - x_min));
  return n_points == o.n_points && std::abs(x_min - o.x_min) <= tol && std::abs(x_max - o.x_max) <= tol;
}

Grid1D build_grid(double x_half_width, std::size_t n_points, double dt) {
  if (!(x_half_width > 0.0) || !std::isfinite(x_half_width))
    throw ParseError("grid.x_half_width", "must be > 0");
  if (n_points < kMinGridPoints)
    throw ParseError("grid.n_points", "must be >= " + std::to_string(kMinGridPoints));
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ParseError("grid.dt", "must be > 0");
  Grid1D g;
  g.x_min = -x_half_width;
  g.x_max = x_half_width;
  g.n_points = n_points;
  g.dx = 2.0 * x_half_width / static_cast<double>(n_points - 1);
  g.dt = dt;
  return g;
}

WaveFunction sech_state(double a, double adot, double n_norm, const Grid1D& grid, double center) {
  if (!(a > 0.0)) throw DomainError("sech_state: width must be positive");
  if (a < 3.0 * grid.dx)
    throw ConfigError("sech_state: width " + std::to_string(a) + " under-resolved (dx=" + std::to_string(grid.dx) + ")");
  WaveFunction psi;
  psi.grid = grid;
  psi.values.resize(grid.n_points);
  const double amp = std::sqrt(n_norm / a);
  const double chirp = adot / (2.0 * a);
  for (std::size_t j = 0; j < grid.n_points; ++j) {
    const double y = grid.x(j) - center;
    const double phase = chirp * y * y;
    psi.values[j] = amp / std::cosh(y / a) * cplx{std::cos(phase), std::sin(phase)};
  }
  return psi;
}

CrankNicolson::CrankNicolson(const Grid1D& grid, const PhysicalConfig& config, ExecPolicy policy,
                             int corrector_passes)
    : grid_(grid),
      config_(config),
      policy_(policy),
      corrector_passes_(corrector_passes),
      potential_(grid.n_points),
      rho_n_(grid.n_points),
      h_(grid.n_points),
      rhs_(grid.n_points),
      next_(grid.n_points),
      prev_(grid.n_points),
      scratch_(grid.n_points) {
  config_.validate();
  if (corrector_passes_ < 0) throw ConfigError("corrector passes must be >= 0");
}

void CrankNicolson::update_potential(double t_mid) {
  const double x0 = config_.x0(t_mid);
  if (potential_ready_ && x0 == x0_cached_) return;
  const double w2 = config_.omega * config_.omega;
  for (std::size_t j = 0; j < grid_.n_points; ++j) {
    const double d = grid_.x(j) - x0;
    potential_[j] = w2 * d * d;
  }
  x0_cached_ = x0;
  potential_ready_ = true;
}

void CrankNicolson::step(WaveFunction& psi, double g_mid, double dt, double t_mid) {
  update_potential(t_mid);
  const double kinetic_diag = 1.0 / (grid_.dx * grid_.dx);
  const double off = -0.5 / (grid_.dx * grid_.dx);
  const std::span<const cplx> psi_n = psi.values;

  kernels::density(policy_, psi_n, rho_n_);

  // Predictor with the current density.
  kernels::hamiltonian_diag(policy_, potential_, rho_n_, {}, g_mid, kinetic_diag, h_);
  kernels::cn_explicit(policy_, psi_n, h_, off, dt, rhs_);
  kernels::cn_implicit_solve(h_, off, dt, rhs_, next_, scratch_);

  double last_change = 0.0;
  for (int pass = 0; pass < corrector_passes_; ++pass) {
    std::swap(prev_, next_);
    kernels::hamiltonian_diag(policy_, potential_, rho_n_, prev_, g_mid, kinetic_diag, h_);
    kernels::cn_explicit(policy_, psi_n, h_, off, dt, rhs_);
    kernels::cn_implicit_solve(h_, off, dt, rhs_, next_, scratch_);
    const double change = kernels::max_abs_diff(policy_, next_, prev_);
    if (!std::isfinite(change) || (pass > 0 && change > 10.0 * last_change && change > 1e-6))
      throw StabilityError("Crank-Nicolson corrector diverged at t=" + std::to_string(t_mid) +
                           "; reduce dt (dt=" + std::to_string(dt) + ")");
    last_change = change;
    if (change < kCorrectorTolerance) break;
  }
  if (!std::isfinite(std::abs(next_[grid_.n_points / 2])))
    throw StabilityError("Crank-Nicolson produced non-finite values; reduce dt");

  std::swap(psi.values, next_);
  psi.time += dt;
}

WaveFunction step_cn(const WaveFunction& psi, double g_mid, const PhysicalConfig& config, double dt,
                     ExecPolicy policy) {
  CrankNicolson cn(psi.grid, config, policy);
  WaveFunction out = psi;
  cn.step(out, g_mid, dt, psi.time + 0.5 * dt);
  return out;
}

namespace {

Observation observe(const WaveFunction& psi, const std::optional<WaveFunction>& target, ExecPolicy policy) {
  Observation o;
  o.t = psi.time;
  const auto m = kernels::moments(policy, psi.values, psi.grid.x_min, psi.grid.dx);
  o.norm = m.mass;
  o.width = m.mass > 0.0 ? std::sqrt(12.0 * m.var) / kPi : 0.0;
  o.peak_density = kernels::max_density(policy, psi.values);
  if (target) o.fidelity = fidelity(psi, *target, policy);
  return o;
}

double boundary_ratio(const WaveFunction& psi, double peak) {
  // The wall points themselves are pinned to zero; look at the first
  // interior points.
  const std::size_t n = psi.size();
  const double edge = std::max(std::norm(psi.values[1]), std::norm(psi.values[n - 2]));
  return peak > 0.0 ? edge / peak : 0.0;
}

void record_slice(EvolutionTable& table, const WaveFunction& psi, std::size_t stride) {
  table.t.push_back(psi.time);
  auto& row = table.density.emplace_back();
  for (std::size_t j = 0; j < psi.size(); j += stride) row.push_back(std::norm(psi.values[j]));
}

}  // namespace

PropagationResult propagate(const WaveFunction& psi0, const ProtocolCurve& g, const PhysicalConfig& config,
                            double t_f, const PropagationOptions& opt) {
  config.validate();
  if (!(t_f >= 0.0)) throw ConfigError("propagate: t_f must be >= 0");
  if (!(opt.dt > 0.0)) throw ConfigError("propagate: dt must be > 0");
  if (psi0.size() != psi0.grid.n_points || psi0.size() < kMinGridPoints)
    throw ConfigError("propagate: wave function does not match its grid");
  if (opt.target && !opt.target->grid.same_space(psi0.grid))
    throw ConfigError("propagate: target state lives on a different grid");
  if (t_f > 0.0 && g.t_final() + 1e-9 * t_f < t_f)
    throw ConfigError("propagate: protocol shorter than t_f");

  PropagationResult r;
  r.final_state = psi0;
  r.final_state.time = 0.0;
  const std::size_t observe_every = std::max<std::size_t>(1, opt.observe_every);
  const std::size_t n_steps = t_f > 0.0 ? static_cast<std::size_t>(std::ceil(t_f / opt.dt - 1e-9)) : 0;
  r.steps = n_steps;
  r.dt = n_steps > 0 ? t_f / static_cast<double>(n_steps) : 0.0;

  std::size_t slice_every = 0;
  std::size_t space_stride = 1;
  if (opt.evolution_time_slices > 0) {
    r.evolution.emplace();
    // Interior slices plus the first and last state.
    const std::size_t interior = opt.evolution_time_slices > 2 ? opt.evolution_time_slices - 2 : 1;
    slice_every = std::max<std::size_t>(1, (n_steps + interior - 1) / interior);
    if (opt.evolution_time_slices <= 2) slice_every = std::max<std::size_t>(1, n_steps);
    const std::size_t max_x = std::max<std::size_t>(1, opt.evolution_space_points);
    space_stride = (psi0.size() + max_x - 1) / max_x;
    for (std::size_t j = 0; j < psi0.size(); j += space_stride) r.evolution->x.push_back(psi0.grid.x(j));
  }

  auto on_sample = [&](const WaveFunction& psi, std::size_t step) {
    if (step % observe_every == 0 || step == n_steps) {
      auto o = observe(psi, opt.target, opt.policy);
      if (r.observations.empty()) {
        r.max_norm_drift = 0.0;
      } else {
        const double n0 = r.observations.front().norm;
        r.max_norm_drift = std::max(r.max_norm_drift, std::abs(o.norm - n0) / n0);
      }
      r.max_boundary_ratio = std::max(r.max_boundary_ratio, boundary_ratio(psi, o.peak_density));
      r.observations.push_back(o);
    }
    if (opt.snapshot_every > 0 && (step % opt.snapshot_every == 0 || step == n_steps)) r.snapshots.push_back(psi);
    if (r.evolution && (step % slice_every == 0 || step == n_steps)) record_slice(*r.evolution, psi, space_stride);
  };

  on_sample(r.final_state, 0);
  if (n_steps > 0) {
    CrankNicolson cn(psi0.grid, config, opt.policy, opt.corrector_passes);
    for (std::size_t k = 0; k < n_steps; ++k) {
      const double t_mid = (static_cast<double>(k) + 0.5) * r.dt;
      cn.step(r.final_state, g(t_mid), r.dt, t_mid);
      if (k + 1 == n_steps) r.final_state.time = t_f;
      on_sample(r.final_state, k + 1);
    }
  }
  r.box_too_small = r.max_boundary_ratio > kBoundaryRatioLimit;
  return r;
}

}  // namespace solsta
