#include "solsta/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "solsta/types.hpp"

namespace solsta {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::switching_function: return "switching-function";
    case Provenance::sta_designed: return "sta-designed";
    case Provenance::constant: return "constant";
    case Provenance::loaded: return "loaded";
  }
  return "unknown";
}

ProtocolCurve::ProtocolCurve(double t_f, std::vector<double> g, Provenance provenance)
    : t_f_(t_f), g_(std::move(g)), provenance_(provenance) {
  if (!(t_f > 0.0)) throw ConfigError("protocol: t_f must be positive");
  if (g_.size() < 2) throw ConfigError("protocol: need at least two samples");
  const std::size_t n = g_.size();
  h_ = t_f_ / static_cast<double>(n - 1);

  slope_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      slope_[i] = (g_[i - 2] - 8.0 * g_[i - 1] + 8.0 * g_[i + 1] - g_[i + 2]) / (12.0 * h_);
    } else if (n == 2) {
      slope_[i] = (g_[1] - g_[0]) / h_;
    } else if (i == 0) {
      slope_[i] = (-3.0 * g_[0] + 4.0 * g_[1] - g_[2]) / (2.0 * h_);
    } else if (i == n - 1) {
      slope_[i] = (3.0 * g_[n - 1] - 4.0 * g_[n - 2] + g_[n - 3]) / (2.0 * h_);
    } else {
      slope_[i] = (g_[i + 1] - g_[i - 1]) / (2.0 * h_);
    }
  }
}

ProtocolCurve ProtocolCurve::sample(const std::function<double(double)>& fn, double t_f,
                                    std::size_t n_samples, Provenance provenance) {
  if (n_samples < 2) throw ConfigError("protocol: need at least two samples");
  std::vector<double> g(n_samples);
  const double h = t_f / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = (i + 1 == n_samples) ? t_f : h * static_cast<double>(i);
    g[i] = fn(t);
  }
  return ProtocolCurve(t_f, std::move(g), provenance);
}

ProtocolCurve ProtocolCurve::constant(double g, double t_f) {
  return ProtocolCurve(t_f, std::vector<double>{g, g}, Provenance::constant);
}

ProtocolCurve ProtocolCurve::from_samples(std::span<const double> t, std::span<const double> g,
                                          Provenance provenance) {
  if (t.size() != g.size() || t.size() < 2)
    throw ConfigError("protocol: time and value columns must match and hold >= 2 rows");
  if (std::abs(t.front()) > 1e-12) throw ConfigError("protocol: first time sample must be 0");
  const double t_f = t.back();
  const double h = t_f / static_cast<double>(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw ConfigError("protocol: time samples must increase strictly");
    if (std::abs(t[i] - h * static_cast<double>(i)) > 1e-9 * std::max(1.0, t_f))
      throw ConfigError("protocol: time samples must be uniform");
  }
  return ProtocolCurve(t_f, std::vector<double>(g.begin(), g.end()), provenance);
}

double ProtocolCurve::time_at(std::size_t i) const noexcept {
  return (i + 1 == g_.size()) ? t_f_ : h_ * static_cast<double>(i);
}

double ProtocolCurve::operator()(double t) const {
  const std::size_t n = g_.size();
  if (t <= 0.0) return g_.front();
  if (t >= t_f_) return g_.back();
  const double pos = t / h_;
  auto i = static_cast<std::size_t>(pos);
  if (i >= n - 1) i = n - 2;
  const double u = pos - static_cast<double>(i);
  if (u == 0.0) return g_[i];
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * g_[i] + h10 * h_ * slope_[i] + h01 * g_[i + 1] + h11 * h_ * slope_[i + 1];
}

}  // namespace solsta
