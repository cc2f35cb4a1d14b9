#pragma once

#include <cstddef>
#include <vector>

#include "solsta/protocol.hpp"
#include "solsta/trajectory.hpp"
#include "solsta/types.hpp"

namespace solsta {

/// Widths below this are treated as collapse.
inline constexpr double kCollapseWidth = 1e-6;
inline constexpr std::size_t kDefaultOdeSteps = 100000;

struct StateDerivative {
  double adot = 0.0;
  double bdot = 0.0;
  double zetadot = 0.0;
  double cdot = 0.0;
};

/// Right-hand side of the reduced (a, b, zeta, c) dynamics of the chirped
/// sech ansatz. The phase is not evolved.
StateDerivative ode_rhs(const SolitonState& state, double g, const PhysicalConfig& config, double t);

/// d2a/dt2 of the closed second-order width equation
///   a'' + 4 a w^2 = 4 / (pi^2 a^3) - 4 g N / (pi^2 a^2).
double width_acceleration(double a, double g, const PhysicalConfig& config);

/// Integrates the width equation with classical RK4 over [0, g.t_final()].
/// Samples include t = 0 and t = t_f; addot comes from the right-hand side.
WidthTrajectory integrate_width(const ProtocolCurve& g, double a0, double adot0,
                                const PhysicalConfig& config,
                                std::size_t n_steps = kDefaultOdeSteps);

struct FullTrajectory {
  std::vector<double> t;
  std::vector<SolitonState> states;
  std::vector<double> g;
};

/// Integrates (a, b, zeta, c) jointly with classical RK4.
FullTrajectory integrate_full(const ProtocolCurve& g, const SolitonState& initial,
                              const PhysicalConfig& config, std::size_t n_steps = kDefaultOdeSteps);

}  // namespace solsta
