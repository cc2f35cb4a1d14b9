#pragma once

#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace solsta {

inline constexpr double kPi = std::numbers::pi;

// Error hierarchy. Configuration problems map to CLI exit code 2, everything
// else derived from NumericalError maps to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  ParseError(std::string key, const std::string& what)
      : ConfigError("config key '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoRootError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InfeasibleTrajectoryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StabilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Raised when the soliton width collapses during ODE integration.
class IntegrationFailure : public NumericalError {
 public:
  IntegrationFailure(double t, const std::string& what)
      : NumericalError(what + " at t=" + std::to_string(t)), time_(t) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Trap and normalization parameters. The trap is V = omega^2 (x - x0(t))^2
/// and the field is normalized to 2 * n_norm.
struct PhysicalConfig {
  double omega = 0.04;
  double n_norm = 1.0;
  std::function<double(double)> x0_schedule = [](double) { return 0.0; };

  double x0(double t) const { return x0_schedule ? x0_schedule(t) : 0.0; }
  void validate() const;
};

/// Variational parameters of the chirped sech ansatz. The amplitude is
/// derived, sqrt(N / a), and never stored.
struct SolitonState {
  double a = 1.0;     // width
  double b = 0.0;     // chirp
  double c = 0.0;     // velocity
  double zeta = 0.0;  // center
  double phi = 0.0;   // global phase, not evolved

  double amplitude(double n_norm) const;
};

enum class ReferenceMethod { perturbative, exact };

std::string to_string(ReferenceMethod m);
ReferenceMethod reference_method_from_string(const std::string& s);

}  // namespace solsta
