#include "solsta/adiabatic.hpp"

#include <cmath>

namespace solsta {

namespace {

constexpr double kPi2 = kPi * kPi;
constexpr int kNewtonIterations = 50;

double quartic(double a, double g, const PhysicalConfig& c) {
  const double w2 = c.omega * c.omega;
  return kPi2 * w2 * a * a * a * a + g * c.n_norm * a - 1.0;
}

double quartic_slope(double a, double g, const PhysicalConfig& c) {
  const double w2 = c.omega * c.omega;
  return 4.0 * kPi2 * w2 * a * a * a + g * c.n_norm;
}

double bisect_quartic(double g, const PhysicalConfig& c) {
  double lo = 1e-9;
  double hi = 10.0 / (c.n_norm * c.omega + 1e-12);
  if (quartic(lo, g, c) > 0.0) throw NoRootError("ac_exact: no positive root (q(lo) > 0)");
  for (int k = 0; k < 200 && quartic(hi, g, c) < 0.0; ++k) hi *= 2.0;
  if (quartic(hi, g, c) < 0.0) throw NoRootError("ac_exact: no positive root of the width quartic");
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (quartic(mid, g, c) < 0.0) lo = mid; else hi = mid;
    if (hi - lo <= 1e-16 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void SwitchingParams::validate() const {
  if (!(t_f > 0.0) || !std::isfinite(t_f)) throw ParseError("switching.t_f", "must be > 0");
  if (!(s_rate > 0.0) || !std::isfinite(s_rate)) throw ParseError("switching.s_rate", "must be > 0");
  if (!std::isfinite(g_base)) throw ParseError("switching.g_base", "must be finite");
  if (!std::isfinite(a_s_amp)) throw ParseError("switching.a_s_amp", "must be finite");
}

double switching_g(double t, const SwitchingParams& p) {
  return p.g_base + p.a_s_amp * (0.5 + std::atan(p.s_rate * kPi * (t - 0.5 * p.t_f)) / kPi);
}

double switching_gdot(double t, const SwitchingParams& p) {
  const double u = p.s_rate * kPi * (t - 0.5 * p.t_f);
  return p.a_s_amp * p.s_rate / (1.0 + u * u);
}

double switching_gddot(double t, const SwitchingParams& p) {
  const double u = p.s_rate * kPi * (t - 0.5 * p.t_f);
  const double den = 1.0 + u * u;
  return -2.0 * p.a_s_amp * p.s_rate * p.s_rate * kPi * u / (den * den);
}

std::pair<double, double> g_edges(const SwitchingParams& p) {
  const double arc = std::atan(p.s_rate * kPi * p.t_f / 2.0) / kPi;
  return {p.g_base + p.a_s_amp * (0.5 - arc), p.g_base + p.a_s_amp * (0.5 + arc)};
}

ProtocolCurve switching_protocol(const SwitchingParams& p, std::size_t n_samples) {
  p.validate();
  return ProtocolCurve::sample([&](double t) { return switching_g(t, p); }, p.t_f, n_samples,
                               Provenance::switching_function);
}

double kepler_potential(double a, double g, const PhysicalConfig& c) {
  if (!(a > 0.0)) throw DomainError("kepler_potential: width must be positive");
  const double w2 = c.omega * c.omega;
  return 2.0 * a * a * w2 - 4.0 * g * c.n_norm / (a * kPi2) + 2.0 / (kPi2 * a * a);
}

double ac_perturbative(double g, const PhysicalConfig& c) {
  if (!(g > 0.0)) throw DomainError("ac_perturbative: g must be positive");
  const double gn = g * c.n_norm;
  const double gn4 = gn * gn * gn * gn;
  return (1.0 / gn) * (1.0 - kPi2 * c.omega * c.omega / gn4);
}

double ac_exact(double g, const PhysicalConfig& c) {
  if (c.omega == 0.0) {
    if (!(g > 0.0)) throw NoRootError("ac_exact: no positive root for omega = 0 and g <= 0");
    return 1.0 / (c.n_norm * g);
  }
  if (!(g > 0.0)) return bisect_quartic(g, c);

  // q is convex on a > 0 and q(1/(Ng)) > 0, so Newton descends monotonically.
  double a = 1.0 / (c.n_norm * g);
  for (int k = 0; k < kNewtonIterations; ++k) {
    const double step = quartic(a, g, c) / quartic_slope(a, g, c);
    const double next = a - step;
    if (!(next > 0.0) || !std::isfinite(next)) return bisect_quartic(g, c);
    if (std::abs(step) <= 1e-16 * next) return next;
    a = next;
  }
  if (std::abs(quartic(a, g, c)) < 1e-13) return a;
  return bisect_quartic(g, c);
}

double ac_reference(double g, const PhysicalConfig& config, ReferenceMethod method) {
  return method == ReferenceMethod::exact ? ac_exact(g, config) : ac_perturbative(g, config);
}

ReferencePoint ac_at(double t, const SwitchingParams& p, const PhysicalConfig& c, ReferenceMethod method) {
  const double g = switching_g(t, p);
  const double gd = switching_gdot(t, p);
  const double gdd = switching_gddot(t, p);
  const double n = c.n_norm;
  ReferencePoint r;
  if (method == ReferenceMethod::perturbative) {
    // a = 1/(N g) - K/(N g^5), K = pi^2 w^2 / N^4
    const double k = kPi2 * c.omega * c.omega / (n * n * n * n);
    const double g2 = g * g;
    const double g3 = g2 * g;
    const double g6 = g3 * g3;
    const double da = -1.0 / (n * g2) + 5.0 * k / (n * g6);
    const double d2a = 2.0 / (n * g3) - 30.0 * k / (n * g6 * g);
    r.a = ac_perturbative(g, c);
    r.adot = da * gd;
    r.addot = d2a * gd * gd + da * gdd;
  } else {
    // Implicit differentiation of q(a, g) = 0.
    const double w2 = c.omega * c.omega;
    const double a = ac_exact(g, c);
    const double d = 4.0 * kPi2 * w2 * a * a * a + g * n;
    const double adot = -n * a * gd / d;
    const double ddot = 12.0 * kPi2 * w2 * a * a * adot + gd * n;
    r.a = a;
    r.adot = adot;
    r.addot = -n * (adot * gd + a * gdd) / d + n * a * gd * ddot / (d * d);
  }
  return r;
}

WidthTrajectory ac_trajectory(const SwitchingParams& p, const PhysicalConfig& config,
                              std::size_t n_samples, ReferenceMethod method) {
  p.validate();
  config.validate();
  if (n_samples < 3) throw ConfigError("ac_trajectory: n_samples must be >= 3");
  WidthTrajectory w;
  w.t = uniform_times(p.t_f, n_samples);
  w.a.resize(n_samples);
  w.adot.resize(n_samples);
  w.addot.resize(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto r = ac_at(w.t[i], p, config, method);
    w.a[i] = r.a;
    w.adot[i] = r.adot;
    w.addot[i] = r.addot;
  }
  return w;
}

}  // namespace solsta
