#include "solsta/sta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace solsta {

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr std::size_t kPositivityProbe = 20001;

}  // namespace

std::string to_string(BoundarySource s) {
  switch (s) {
    case BoundarySource::perturbative: return "perturbative";
    case BoundarySource::exact: return "exact";
    case BoundarySource::custom: return "custom";
  }
  return "custom";
}

BoundaryConditions boundary_conditions(const SwitchingParams& p, const PhysicalConfig& config,
                                       ReferenceMethod method) {
  const auto ref = ac_trajectory(p, config, 3, method);
  BoundaryConditions bc;
  bc.a0 = ref.a.front();
  bc.adot0 = ref.adot.front();
  bc.addot0 = ref.addot.front();
  bc.af = ref.a.back();
  bc.adotf = ref.adot.back();
  bc.addotf = ref.addot.back();
  bc.source = method == ReferenceMethod::exact ? BoundarySource::exact : BoundarySource::perturbative;
  return bc;
}

Quintic fit_quintic(const BoundaryConditions& bc, double t_f) {
  if (!(t_f > 0.0)) throw ConfigError("design_polynomial: t_f must be positive");
  if (!(bc.a0 > 0.0) || !(bc.af > 0.0)) throw DomainError("design_polynomial: boundary widths must be positive");

  // In tau the derivatives scale by t_f and t_f^2. The tau = 0 conditions fix
  // c0..c2; the tau = 1 conditions leave a 3x3 system with a closed-form
  // inverse.
  Quintic q;
  q.t_f = t_f;
  auto& c = q.tau_coeffs;
  c[0] = bc.a0;
  c[1] = bc.adot0 * t_f;
  c[2] = 0.5 * bc.addot0 * t_f * t_f;
  const double r0 = bc.af - (c[0] + c[1] + c[2]);
  const double r1 = bc.adotf * t_f - (c[1] + 2.0 * c[2]);
  const double r2 = bc.addotf * t_f * t_f - 2.0 * c[2];
  c[3] = 10.0 * r0 - 4.0 * r1 + 0.5 * r2;
  c[4] = -15.0 * r0 + 7.0 * r1 - r2;
  c[5] = 6.0 * r0 - 3.0 * r1 + 0.5 * r2;

  for (std::size_t i = 0; i < kPositivityProbe; ++i) {
    const double t = t_f * static_cast<double>(i) / static_cast<double>(kPositivityProbe - 1);
    const double a = q.value(t);
    if (!(a > 0.0))
      throw InfeasibleTrajectoryError("design_polynomial: quintic width is non-positive at t=" + std::to_string(t));
  }
  return q;
}

WidthTrajectory design_polynomial(const BoundaryConditions& bc, double t_f, std::size_t n_samples) {
  if (n_samples < 2) throw ConfigError("design_polynomial: n_samples must be >= 2");
  return WidthTrajectory::from_quintic(fit_quintic(bc, t_f), n_samples);
}

double invert_width_equation(double a, double addot, const PhysicalConfig& c) {
  if (!(a > 0.0)) throw DomainError("reconstruct_g: width must be positive");
  const double n = c.n_norm;
  return 1.0 / (a * n) - kPi2 * a * a / (4.0 * n) * (addot + 4.0 * a * c.omega * c.omega);
}

ProtocolCurve reconstruct_g(const WidthTrajectory& traj, const PhysicalConfig& config) {
  config.validate();
  if (traj.size() < 2 || traj.addot.size() != traj.size()) throw ConfigError("reconstruct_g: trajectory must carry addot");
  std::vector<double> g(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) g[i] = invert_width_equation(traj.a[i], traj.addot[i], config);
  return ProtocolCurve(traj.t_final(), std::move(g), Provenance::sta_designed);
}

DesignResult design_protocol(const SwitchingParams& p, const PhysicalConfig& config,
                             ReferenceMethod method, std::size_t n_samples) {
  p.validate();
  DesignResult r;
  r.bc = boundary_conditions(p, config, method);
  r.trajectory = design_polynomial(r.bc, p.t_f, n_samples);
  r.protocol = reconstruct_g(r.trajectory, config);
  const auto g = r.protocol.values();
  const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
  r.min_g = *lo;
  r.max_g = *hi;
  r.sign_change = r.min_g <= 0.0;
  return r;
}

}  // namespace solsta
