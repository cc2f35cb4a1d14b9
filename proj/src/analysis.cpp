#include "solsta/analysis.hpp"

#include <cmath>

namespace solsta {

double norm(const WaveFunction& psi, ExecPolicy policy) {
  return kernels::trapezoid_norm(policy, psi.values, psi.grid.dx);
}

double width_second_moment(const WaveFunction& psi, ExecPolicy policy) {
  const auto m = kernels::moments(policy, psi.values, psi.grid.x_min, psi.grid.dx);
  if (!(m.mass > 0.0)) throw DomainError("width_second_moment: zero norm");
  return std::sqrt(12.0 * m.var) / kPi;
}

double center_of_mass(const WaveFunction& psi, ExecPolicy policy) {
  const auto m = kernels::moments(policy, psi.values, psi.grid.x_min, psi.grid.dx);
  if (!(m.mass > 0.0)) throw DomainError("center_of_mass: zero norm");
  return m.mean;
}

double fidelity(const WaveFunction& psi, const WaveFunction& target, ExecPolicy policy) {
  if (!psi.grid.same_space(target.grid) || psi.size() != target.size())
    throw ConfigError("fidelity: states live on different grids");
  const double np = norm(psi, policy);
  const double nt = norm(target, policy);
  if (!(np > 0.0) || !(nt > 0.0)) throw DomainError("fidelity: zero norm");
  const cplx ov = kernels::trapezoid_overlap(policy, target.values, psi.values, psi.grid.dx);
  return std::norm(ov) / (np * nt);
}

}  // namespace solsta
