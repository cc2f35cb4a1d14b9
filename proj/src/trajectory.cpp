#include "solsta/trajectory.hpp"

#include <cmath>

#include "solsta/types.hpp"

namespace solsta {

std::vector<double> uniform_times(double t_f, std::size_t n_samples) {
  if (n_samples < 2) throw ConfigError("need at least two time samples");
  std::vector<double> t(n_samples);
  const double h = t_f / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) t[i] = h * static_cast<double>(i);
  t.back() = t_f;
  return t;
}

std::array<double, 6> Quintic::coeffs() const {
  std::array<double, 6> b{};
  double scale = 1.0;
  for (std::size_t j = 0; j < 6; ++j) {
    b[j] = tau_coeffs[j] / scale;
    scale *= t_f;
  }
  return b;
}

double Quintic::value(double t) const {
  const double tau = t / t_f;
  const auto& c = tau_coeffs;
  return c[0] + tau * (c[1] + tau * (c[2] + tau * (c[3] + tau * (c[4] + tau * c[5]))));
}

double Quintic::first(double t) const {
  const double tau = t / t_f;
  const auto& c = tau_coeffs;
  const double d = c[1] + tau * (2.0 * c[2] + tau * (3.0 * c[3] + tau * (4.0 * c[4] + tau * 5.0 * c[5])));
  return d / t_f;
}

double Quintic::second(double t) const {
  const double tau = t / t_f;
  const auto& c = tau_coeffs;
  const double d = 2.0 * c[2] + tau * (6.0 * c[3] + tau * (12.0 * c[4] + tau * 20.0 * c[5]));
  return d / (t_f * t_f);
}

WidthTrajectory WidthTrajectory::from_quintic(const Quintic& q, std::size_t n_samples) {
  WidthTrajectory w;
  w.t = uniform_times(q.t_f, n_samples);
  w.a.resize(n_samples);
  w.adot.resize(n_samples);
  w.addot.resize(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    w.a[i] = q.value(w.t[i]);
    w.adot[i] = q.first(w.t[i]);
    w.addot[i] = q.second(w.t[i]);
  }
  w.representation = Representation::quintic;
  w.quintic = q;
  return w;
}

}  // namespace solsta
