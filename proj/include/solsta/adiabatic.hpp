#pragma once

#include <cstddef>
#include <utility>

#include "solsta/protocol.hpp"
#include "solsta/trajectory.hpp"
#include "solsta/types.hpp"

namespace solsta {

/// Arctan switching schedule
///   g(t) = g_base + A_s * (1/2 + atan(s * pi * (t - t_f / 2)) / pi).
struct SwitchingParams {
  double g_base = 2.0;
  double a_s_amp = 10.0;
  double s_rate = 1.0;
  double t_f = 100.0;

  void validate() const;
};

double switching_g(double t, const SwitchingParams& p);
double switching_gdot(double t, const SwitchingParams& p);
double switching_gddot(double t, const SwitchingParams& p);

/// (g(0), g(t_f)) from their closed forms.
std::pair<double, double> g_edges(const SwitchingParams& p);

/// Samples the switching function; n_samples defaults to one sample per
/// half RK4 step of a kDefaultOdeSteps integration.
ProtocolCurve switching_protocol(const SwitchingParams& p, std::size_t n_samples);

/// Effective potential of the fictitious width particle,
///   U(a) = 2 a^2 w^2 - 4 g N / (pi^2 a) + 2 / (pi^2 a^2).
double kepler_potential(double a, double g, const PhysicalConfig& config);

/// Small-omega minimum of U: (1 / (N g)) * (1 - pi^2 w^2 / (g^4 N^4)).
double ac_perturbative(double g, const PhysicalConfig& config);

/// Positive root of pi^2 w^2 a^4 + g N a - 1 = 0 connected to 1 / (N g).
double ac_exact(double g, const PhysicalConfig& config);

double ac_reference(double g, const PhysicalConfig& config, ReferenceMethod method);

/// a_c(t) along the switching schedule with its first two time derivatives.
WidthTrajectory ac_trajectory(const SwitchingParams& p, const PhysicalConfig& config,
                              std::size_t n_samples, ReferenceMethod method);

/// a_c, da_c/dt and d2a_c/dt2 at a single time.
struct ReferencePoint {
  double a = 0.0;
  double adot = 0.0;
  double addot = 0.0;
};
ReferencePoint ac_at(double t, const SwitchingParams& p, const PhysicalConfig& config,
                     ReferenceMethod method);

}  // namespace solsta
