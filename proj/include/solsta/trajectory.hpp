#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace solsta {

/// Quintic a(t) = sum_j b_j t^j, stored in normalized time tau = t / t_f
/// (tau_coeffs) for evaluation and reported in physical time (coeffs).
struct Quintic {
  double t_f = 1.0;
  std::array<double, 6> tau_coeffs{};

  std::array<double, 6> coeffs() const;  // b_0 ... b_5 in t
  double value(double t) const;
  double first(double t) const;
  double second(double t) const;
};

enum class Representation { sampled, quintic };

/// Width samples a(t), da/dt and d2a/dt2 on a uniform grid over [0, t_f].
struct WidthTrajectory {
  std::vector<double> t;
  std::vector<double> a;
  std::vector<double> adot;
  std::vector<double> addot;
  Representation representation = Representation::sampled;
  std::optional<Quintic> quintic;

  std::size_t size() const noexcept { return t.size(); }
  double t_final() const { return t.back(); }

  static WidthTrajectory from_quintic(const Quintic& q, std::size_t n_samples);
};

std::vector<double> uniform_times(double t_f, std::size_t n_samples);

}  // namespace solsta
