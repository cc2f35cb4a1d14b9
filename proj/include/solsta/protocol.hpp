#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace solsta {

enum class Provenance { switching_function, sta_designed, constant, loaded };

std::string to_string(Provenance p);

/// A nonlinearity schedule g(t) sampled on a uniform grid over [0, t_f].
///
/// Evaluation between knots is cubic Hermite with knot slopes from
/// fourth-order central differences (second-order one-sided at the two ends
/// of the grid), so the interpolant is C1 and exact at the knots.
class ProtocolCurve {
 public:
  ProtocolCurve() = default;
  ProtocolCurve(double t_f, std::vector<double> g, Provenance provenance);

  /// Samples fn at n_samples uniform points including both ends.
  static ProtocolCurve sample(const std::function<double(double)>& fn, double t_f,
                              std::size_t n_samples, Provenance provenance);
  static ProtocolCurve constant(double g, double t_f);

  /// Builds from explicit (t, g) pairs. The times must be uniform, start at 0
  /// and be strictly increasing; used when loading a protocol CSV.
  static ProtocolCurve from_samples(std::span<const double> t, std::span<const double> g,
                                    Provenance provenance);

  double operator()(double t) const;

  double t_final() const noexcept { return t_f_; }
  std::size_t size() const noexcept { return g_.size(); }
  double time_at(std::size_t i) const noexcept;
  std::span<const double> values() const noexcept { return g_; }
  Provenance provenance() const noexcept { return provenance_; }

 private:
  double t_f_ = 0.0;
  double h_ = 0.0;
  std::vector<double> g_;
  std::vector<double> slope_;
  Provenance provenance_ = Provenance::constant;
};

}  // namespace solsta
