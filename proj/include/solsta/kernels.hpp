#pragma once

// Grid kernels used by the Crank-Nicolson propagator and the observables.
//
// Every kernel exists twice: a plain serial loop (namespace serial), kept as
// the reference the tests compare against, and an OpenMP version (namespace
// omp). Pointwise kernels are bit-identical between the two. Reductions in
// the OpenMP version sum fixed-size blocks and combine the partial sums in
// block order, so their result does not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>

namespace solsta {

using cplx = std::complex<double>;

enum class ExecPolicy { serial, parallel };

namespace kernels {

inline constexpr std::size_t kReductionBlock = 512;

struct Moments {
  double mass = 0.0;   // sum of w_j rho_j
  double mean = 0.0;   // density-weighted <x>
  double var = 0.0;    // density-weighted <(x - <x>)^2>
};

namespace serial {
void density(std::span<const cplx> psi, std::span<double> rho);
// h_j = kinetic_diag + v_j - g * rho_mid_j with rho_mid = (rho_n + |psi_it|^2) / 2,
// or rho_n alone when psi_it is empty.
void hamiltonian_diag(std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h);
// out_j = psi_j - i dt/2 (h_j psi_j + off (psi_{j-1} + psi_{j+1})), zero outside the grid.
void cn_explicit(std::span<const cplx> psi, std::span<const double> h, double off, double dt,
                 std::span<cplx> out);
double trapezoid_norm(std::span<const cplx> psi, double dx);
cplx trapezoid_overlap(std::span<const cplx> bra, std::span<const cplx> ket, double dx);
Moments moments(std::span<const cplx> psi, double x_min, double dx);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double max_density(std::span<const cplx> psi);
}  // namespace serial

namespace omp {
void density(std::span<const cplx> psi, std::span<double> rho);
void hamiltonian_diag(std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h);
void cn_explicit(std::span<const cplx> psi, std::span<const double> h, double off, double dt,
                 std::span<cplx> out);
double trapezoid_norm(std::span<const cplx> psi, double dx);
cplx trapezoid_overlap(std::span<const cplx> bra, std::span<const cplx> ket, double dx);
Moments moments(std::span<const cplx> psi, double x_min, double dx);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double max_density(std::span<const cplx> psi);
}  // namespace omp

/// Solves the tridiagonal system of the implicit half of a CN step,
///   (1 + i dt/2 h_j) x_j + i dt/2 off (x_{j-1} + x_{j+1}) = rhs_j,
/// on interior points with x_0 = x_{n-1} = 0. Sequential Thomas elimination;
/// scratch must hold rhs.size() entries.
void cn_implicit_solve(std::span<const double> h, double off, double dt, std::span<const cplx> rhs,
                       std::span<cplx> x, std::span<cplx> scratch);

// Policy dispatch.
void density(ExecPolicy p, std::span<const cplx> psi, std::span<double> rho);
void hamiltonian_diag(ExecPolicy p, std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h);
void cn_explicit(ExecPolicy p, std::span<const cplx> psi, std::span<const double> h, double off,
                 double dt, std::span<cplx> out);
double trapezoid_norm(ExecPolicy p, std::span<const cplx> psi, double dx);
cplx trapezoid_overlap(ExecPolicy p, std::span<const cplx> bra, std::span<const cplx> ket, double dx);
Moments moments(ExecPolicy p, std::span<const cplx> psi, double x_min, double dx);
double max_abs_diff(ExecPolicy p, std::span<const cplx> a, std::span<const cplx> b);
double max_density(ExecPolicy p, std::span<const cplx> psi);

}  // namespace kernels
}  // namespace solsta
