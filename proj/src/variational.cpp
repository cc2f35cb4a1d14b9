#include "solsta/variational.hpp"

#include <array>
#include <cmath>
#include <string>

namespace solsta {

namespace {

constexpr double kPi2 = kPi * kPi;

void check_width(double a, double t) {
  if (!(a >= kCollapseWidth)) throw IntegrationFailure(t, "width collapse (a=" + std::to_string(a) + ")");
}

void check_inputs(const ProtocolCurve& g, std::size_t n_steps, const PhysicalConfig& config) {
  config.validate();
  if (n_steps < 10) throw ConfigError("ode: n_steps must be >= 10");
  if (g.size() < 2) throw ConfigError("ode: empty protocol");
}

}  // namespace

StateDerivative ode_rhs(const SolitonState& s, double g, const PhysicalConfig& config, double t) {
  if (!(s.a > 0.0)) throw DomainError("ode_rhs: width must be positive");
  const double a = s.a;
  const double n = config.n_norm;
  const double w2 = config.omega * config.omega;
  StateDerivative d;
  d.adot = 2.0 * a * s.b;
  d.bdot = 2.0 / (kPi2 * a * a * a * a) - 2.0 * s.b * s.b - 2.0 * g * n / (kPi2 * a * a * a) - 2.0 * w2;
  d.zetadot = s.c;
  d.cdot = -4.0 * w2 * (s.zeta - config.x0(t));
  return d;
}

double width_acceleration(double a, double g, const PhysicalConfig& config) {
  const double w2 = config.omega * config.omega;
  return 4.0 / (kPi2 * a * a * a) - 4.0 * g * config.n_norm / (kPi2 * a * a) - 4.0 * a * w2;
}

WidthTrajectory integrate_width(const ProtocolCurve& g, double a0, double adot0,
                                const PhysicalConfig& config, std::size_t n_steps) {
  check_inputs(g, n_steps, config);
  if (!(a0 > 0.0)) throw DomainError("integrate_width: a0 must be positive");

  const double t_f = g.t_final();
  WidthTrajectory w;
  w.t = uniform_times(t_f, n_steps + 1);
  w.a.resize(n_steps + 1);
  w.adot.resize(n_steps + 1);
  w.addot.resize(n_steps + 1);

  const double h = t_f / static_cast<double>(n_steps);
  double a = a0;
  double v = adot0;
  auto acc = [&](double aa, double t) {
    check_width(aa, t);
    return width_acceleration(aa, g(t), config);
  };

  w.a[0] = a;
  w.adot[0] = v;
  w.addot[0] = acc(a, 0.0);
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double t = w.t[i];
    const double tm = t + 0.5 * h;
    const double k1a = v;
    const double k1v = acc(a, t);
    const double k2a = v + 0.5 * h * k1v;
    const double k2v = acc(a + 0.5 * h * k1a, tm);
    const double k3a = v + 0.5 * h * k2v;
    const double k3v = acc(a + 0.5 * h * k2a, tm);
    const double k4a = v + h * k3v;
    const double k4v = acc(a + h * k3a, w.t[i + 1]);
    a += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    w.a[i + 1] = a;
    w.adot[i + 1] = v;
    w.addot[i + 1] = acc(a, w.t[i + 1]);
  }
  return w;
}

FullTrajectory integrate_full(const ProtocolCurve& g, const SolitonState& initial,
                              const PhysicalConfig& config, std::size_t n_steps) {
  check_inputs(g, n_steps, config);
  if (!(initial.a > 0.0)) throw DomainError("integrate_full: initial width must be positive");

  using Vec = std::array<double, 4>;  // a, b, zeta, c
  auto rhs = [&](const Vec& y, double t) {
    check_width(y[0], t);
    const SolitonState s{y[0], y[1], y[3], y[2], 0.0};
    const auto d = ode_rhs(s, g(t), config, t);
    return Vec{d.adot, d.bdot, d.zetadot, d.cdot};
  };
  auto axpy = [](const Vec& y, double h, const Vec& k) {
    return Vec{y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
  };

  const double t_f = g.t_final();
  const double h = t_f / static_cast<double>(n_steps);
  FullTrajectory out;
  out.t = uniform_times(t_f, n_steps + 1);
  out.states.reserve(n_steps + 1);
  out.g.reserve(n_steps + 1);

  Vec y{initial.a, initial.b, initial.zeta, initial.c};
  out.states.push_back(initial);
  out.g.push_back(g(0.0));
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double t = out.t[i];
    const Vec k1 = rhs(y, t);
    const Vec k2 = rhs(axpy(y, 0.5 * h, k1), t + 0.5 * h);
    const Vec k3 = rhs(axpy(y, 0.5 * h, k2), t + 0.5 * h);
    const Vec k4 = rhs(axpy(y, h, k3), out.t[i + 1]);
    for (std::size_t j = 0; j < 4; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    check_width(y[0], out.t[i + 1]);
    out.states.push_back(SolitonState{y[0], y[1], y[3], y[2], initial.phi});
    out.g.push_back(g(out.t[i + 1]));
  }
  return out;
}

}  // namespace solsta
