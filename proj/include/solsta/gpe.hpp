#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "solsta/kernels.hpp"
#include "solsta/protocol.hpp"
#include "solsta/types.hpp"

namespace solsta {

/// Uniform grid on [x_min, x_max] including both ends, plus the time step.
struct Grid1D {
  double x_min = -40.0;
  double x_max = 40.0;
  std::size_t n_points = 4096;
  double dx = 80.0 / 4095.0;
  double dt = 1e-4;

  double x(std::size_t j) const noexcept { return x_min + dx * static_cast<double>(j); }
  bool same_space(const Grid1D& other) const noexcept;
};

inline constexpr std::size_t kMinGridPoints = 16;

/// Symmetric grid on [-x_half_width, x_half_width].
Grid1D build_grid(double x_half_width, std::size_t n_points, double dt);

struct WaveFunction {
  Grid1D grid;
  std::vector<cplx> values;
  double time = 0.0;

  std::size_t size() const noexcept { return values.size(); }
};

/// sqrt(N/a) sech((x - center)/a) exp(i adot/(2a) (x - center)^2).
/// Throws DomainError for a <= 0 and ConfigError when a < 3 dx.
WaveFunction sech_state(double a, double adot, double n_norm, const Grid1D& grid, double center = 0.0);

/// Reusable Crank-Nicolson stepper for
///   i psi_t = -1/2 psi_xx - g |psi|^2 psi + w^2 (x - x0(t))^2 psi
/// with hard-wall zero boundaries. The nonlinear term uses a predictor with
/// the current density followed by corrector passes with the averaged
/// density (rho_n + |psi_k|^2) / 2.
class CrankNicolson {
 public:
  static constexpr int kDefaultCorrectorPasses = 2;
  static constexpr double kCorrectorTolerance = 1e-12;

  CrankNicolson(const Grid1D& grid, const PhysicalConfig& config,
                ExecPolicy policy = ExecPolicy::parallel,
                int corrector_passes = kDefaultCorrectorPasses);

  /// Advances psi in place by dt with nonlinearity g_mid; t_mid locates the
  /// trap center. Throws StabilityError if the corrector diverges.
  void step(WaveFunction& psi, double g_mid, double dt, double t_mid);

 private:
  void update_potential(double t_mid);

  Grid1D grid_;
  PhysicalConfig config_;
  ExecPolicy policy_;
  int corrector_passes_;
  double x0_cached_ = 0.0;
  bool potential_ready_ = false;
  std::vector<double> potential_;
  std::vector<double> rho_n_;
  std::vector<double> h_;
  std::vector<cplx> rhs_;
  std::vector<cplx> next_;
  std::vector<cplx> prev_;
  std::vector<cplx> scratch_;
};

/// One CN step as a value-returning function.
WaveFunction step_cn(const WaveFunction& psi, double g_mid, const PhysicalConfig& config, double dt,
                     ExecPolicy policy = ExecPolicy::parallel);

struct Observation {
  double t = 0.0;
  double norm = 0.0;
  double width = 0.0;
  double peak_density = 0.0;
  std::optional<double> fidelity;
};

/// Density samples on a downsampled space-time lattice.
struct EvolutionTable {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<std::vector<double>> density;  // [time][space]
};

struct PropagationOptions {
  double dt = 1e-4;
  std::size_t observe_every = 100;
  std::size_t snapshot_every = 0;  // 0: no snapshots
  std::optional<WaveFunction> target;
  ExecPolicy policy = ExecPolicy::parallel;
  int corrector_passes = CrankNicolson::kDefaultCorrectorPasses;
  std::size_t evolution_time_slices = 0;  // 0: no evolution table
  std::size_t evolution_space_points = 1024;
};

struct PropagationResult {
  WaveFunction final_state;
  std::vector<Observation> observations;
  std::vector<WaveFunction> snapshots;
  std::optional<EvolutionTable> evolution;
  std::size_t steps = 0;
  double dt = 0.0;
  double max_norm_drift = 0.0;      // max |norm(t) - norm(0)| / norm(0) over observations
  double max_boundary_ratio = 0.0;  // max edge density / peak density
  bool box_too_small = false;
};

inline constexpr double kBoundaryRatioLimit = 1e-8;

/// Propagates psi0 over [0, t_f] with g evaluated at step midpoints. The
/// effective step is t_f / ceil(t_f / options.dt). t_f = 0 returns psi0.
PropagationResult propagate(const WaveFunction& psi0, const ProtocolCurve& g, const PhysicalConfig& config,
                            double t_f, const PropagationOptions& options);

}  // namespace solsta
