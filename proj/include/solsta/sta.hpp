#pragma once

#include <cstddef>
#include <string>

#include "solsta/adiabatic.hpp"
#include "solsta/protocol.hpp"
#include "solsta/trajectory.hpp"
#include "solsta/types.hpp"

namespace solsta {

enum class BoundarySource { perturbative, exact, custom };

struct BoundaryConditions {
  double a0 = 1.0, adot0 = 0.0, addot0 = 0.0;
  double af = 1.0, adotf = 0.0, addotf = 0.0;
  BoundarySource source = BoundarySource::custom;
};

std::string to_string(BoundarySource s);

/// Values of a_c and its first two derivatives at t = 0 and t = t_f.
BoundaryConditions boundary_conditions(const SwitchingParams& p, const PhysicalConfig& config,
                                       ReferenceMethod method);

/// The quintic through all six boundary conditions, fitted in tau = t / t_f.
/// Throws InfeasibleTrajectoryError if the quintic is not strictly positive
/// on [0, t_f].
Quintic fit_quintic(const BoundaryConditions& bc, double t_f);

/// fit_quintic sampled on n_samples uniform points.
WidthTrajectory design_polynomial(const BoundaryConditions& bc, double t_f,
                                  std::size_t n_samples = 10001);

/// Inverts the width equation for the nonlinearity:
///   g = 1 / (a N) - pi^2 a^2 / (4 N) * (a'' + 4 a w^2).
double invert_width_equation(double a, double addot, const PhysicalConfig& config);

ProtocolCurve reconstruct_g(const WidthTrajectory& traj, const PhysicalConfig& config);

struct DesignResult {
  BoundaryConditions bc;
  WidthTrajectory trajectory;
  ProtocolCurve protocol;
  double min_g = 0.0;
  double max_g = 0.0;
  bool sign_change = false;  // g <= 0 somewhere on [0, t_f]
};

DesignResult design_protocol(const SwitchingParams& p, const PhysicalConfig& config,
                             ReferenceMethod method, std::size_t n_samples = 10001);

}  // namespace solsta
