#include "solsta/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace solsta::kernels {

namespace {

constexpr cplx kI{0.0, 1.0};

inline cplx reciprocal(cplx z) {
  const double inv = 1.0 / (z.real() * z.real() + z.imag() * z.imag());
  return {z.real() * inv, -z.imag() * inv};
}

inline double trapezoid_weight(std::size_t j, std::size_t n) {
  return (j == 0 || j + 1 == n) ? 0.5 : 1.0;
}

inline std::ptrdiff_t block_count(std::size_t n) {
  return static_cast<std::ptrdiff_t>((n + kReductionBlock - 1) / kReductionBlock);
}

inline std::size_t block_begin(std::ptrdiff_t b) { return static_cast<std::size_t>(b) * kReductionBlock; }
inline std::size_t block_end(std::ptrdiff_t b, std::size_t n) {
  return std::min(n, block_begin(b) + kReductionBlock);
}

// Fixed-order blocked sum for the OpenMP reductions.
template <class T, class F>
T blocked_sum(std::size_t n, F&& term) {
  const std::ptrdiff_t nb = block_count(n);
  std::vector<T> partial(static_cast<std::size_t>(nb), T{});
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    T s{};
    for (std::size_t j = block_begin(b); j < block_end(b, n); ++j) s += term(j);
    partial[static_cast<std::size_t>(b)] = s;
  }
  T total{};
  for (const auto& s : partial) total += s;
  return total;
}

template <class F>
double blocked_max(std::size_t n, F&& term) {
  const std::ptrdiff_t nb = block_count(n);
  std::vector<double> partial(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    double m = 0.0;
    for (std::size_t j = block_begin(b); j < block_end(b, n); ++j) m = std::max(m, term(j));
    partial[static_cast<std::size_t>(b)] = m;
  }
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// serial reference

namespace serial {

void density(std::span<const cplx> psi, std::span<double> rho) {
  for (std::size_t j = 0; j < psi.size(); ++j) rho[j] = std::norm(psi[j]);
}

void hamiltonian_diag(std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h) {
  if (psi_it.empty()) {
    for (std::size_t j = 0; j < v.size(); ++j) h[j] = kinetic_diag + v[j] - g * rho_n[j];
  } else {
    for (std::size_t j = 0; j < v.size(); ++j)
      h[j] = kinetic_diag + v[j] - g * (0.5 * (rho_n[j] + std::norm(psi_it[j])));
  }
}

void cn_explicit(std::span<const cplx> psi, std::span<const double> h, double off, double dt,
                 std::span<cplx> out) {
  const std::size_t n = psi.size();
  const cplx f = -0.5 * dt * kI;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx left = j > 0 ? psi[j - 1] : cplx{};
    const cplx right = j + 1 < n ? psi[j + 1] : cplx{};
    out[j] = psi[j] + f * (h[j] * psi[j] + off * (left + right));
  }
}

double trapezoid_norm(std::span<const cplx> psi, double dx) {
  double s = 0.0;
  for (std::size_t j = 0; j < psi.size(); ++j) s += trapezoid_weight(j, psi.size()) * std::norm(psi[j]);
  return s * dx;
}

cplx trapezoid_overlap(std::span<const cplx> bra, std::span<const cplx> ket, double dx) {
  cplx s{};
  for (std::size_t j = 0; j < bra.size(); ++j) s += trapezoid_weight(j, bra.size()) * std::conj(bra[j]) * ket[j];
  return s * dx;
}

Moments moments(std::span<const cplx> psi, double x_min, double dx) {
  const std::size_t n = psi.size();
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double w = trapezoid_weight(j, n) * std::norm(psi[j]);
    m0 += w;
    m1 += w * (x_min + dx * static_cast<double>(j));
  }
  Moments m;
  m.mass = m0 * dx;
  if (m0 <= 0.0) return m;
  m.mean = m1 / m0;
  double m2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = x_min + dx * static_cast<double>(j) - m.mean;
    m2 += trapezoid_weight(j, n) * std::norm(psi[j]) * d * d;
  }
  m.var = m2 / m0;
  return m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double max_density(std::span<const cplx> psi) {
  double m = 0.0;
  for (const auto& z : psi) m = std::max(m, std::norm(z));
  return m;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP

namespace omp {

void density(std::span<const cplx> psi, std::span<double> rho) {
  const auto n = static_cast<std::ptrdiff_t>(psi.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) rho[j] = std::norm(psi[j]);
}

void hamiltonian_diag(std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (psi_it.empty()) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) h[j] = kinetic_diag + v[j] - g * rho_n[j];
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
      h[j] = kinetic_diag + v[j] - g * (0.5 * (rho_n[j] + std::norm(psi_it[j])));
  }
}

void cn_explicit(std::span<const cplx> psi, std::span<const double> h, double off, double dt,
                 std::span<cplx> out) {
  const auto n = static_cast<std::ptrdiff_t>(psi.size());
  const cplx f = -0.5 * dt * kI;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const cplx left = j > 0 ? psi[j - 1] : cplx{};
    const cplx right = j + 1 < n ? psi[j + 1] : cplx{};
    out[j] = psi[j] + f * (h[j] * psi[j] + off * (left + right));
  }
}

double trapezoid_norm(std::span<const cplx> psi, double dx) {
  const std::size_t n = psi.size();
  return dx * blocked_sum<double>(n, [&](std::size_t j) { return trapezoid_weight(j, n) * std::norm(psi[j]); });
}

cplx trapezoid_overlap(std::span<const cplx> bra, std::span<const cplx> ket, double dx) {
  const std::size_t n = bra.size();
  return dx * blocked_sum<cplx>(n, [&](std::size_t j) { return trapezoid_weight(j, n) * std::conj(bra[j]) * ket[j]; });
}

Moments moments(std::span<const cplx> psi, double x_min, double dx) {
  const std::size_t n = psi.size();
  const double m0 = blocked_sum<double>(n, [&](std::size_t j) { return trapezoid_weight(j, n) * std::norm(psi[j]); });
  Moments m;
  m.mass = m0 * dx;
  if (m0 <= 0.0) return m;
  m.mean = blocked_sum<double>(n, [&](std::size_t j) {
             return trapezoid_weight(j, n) * std::norm(psi[j]) * (x_min + dx * static_cast<double>(j));
           }) / m0;
  m.var = blocked_sum<double>(n, [&](std::size_t j) {
            const double d = x_min + dx * static_cast<double>(j) - m.mean;
            return trapezoid_weight(j, n) * std::norm(psi[j]) * d * d;
          }) / m0;
  return m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  return blocked_max(a.size(), [&](std::size_t j) { return std::abs(a[j] - b[j]); });
}

double max_density(std::span<const cplx> psi) {
  return blocked_max(psi.size(), [&](std::size_t j) { return std::norm(psi[j]); });
}

}  // namespace omp

// ---------------------------------------------------------------------------

void cn_implicit_solve(std::span<const double> h, double off, double dt, std::span<const cplx> rhs,
                       std::span<cplx> x, std::span<cplx> scratch) {
  const std::size_t n = rhs.size();
  const cplx beta = 0.5 * dt * off * kI;
  const cplx half = 0.5 * dt * kI;
  x[0] = cplx{};
  x[n - 1] = cplx{};
  if (n < 3) return;

  // scratch holds the modified super-diagonal, x the modified rhs.
  cplx inv = reciprocal(1.0 + half * h[1]);
  scratch[1] = beta * inv;
  x[1] = rhs[1] * inv;
  for (std::size_t j = 2; j + 1 < n; ++j) {
    inv = reciprocal(1.0 + half * h[j] - beta * scratch[j - 1]);
    scratch[j] = beta * inv;
    x[j] = (rhs[j] - beta * x[j - 1]) * inv;
  }
  for (std::size_t j = n - 2; j-- > 1;) x[j] -= scratch[j] * x[j + 1];
}

// ---------------------------------------------------------------------------

void density(ExecPolicy p, std::span<const cplx> psi, std::span<double> rho) {
  p == ExecPolicy::parallel ? omp::density(psi, rho) : serial::density(psi, rho);
}

void hamiltonian_diag(ExecPolicy p, std::span<const double> v, std::span<const double> rho_n,
                      std::span<const cplx> psi_it, double g, double kinetic_diag, std::span<double> h) {
  p == ExecPolicy::parallel ? omp::hamiltonian_diag(v, rho_n, psi_it, g, kinetic_diag, h)
                            : serial::hamiltonian_diag(v, rho_n, psi_it, g, kinetic_diag, h);
}

void cn_explicit(ExecPolicy p, std::span<const cplx> psi, std::span<const double> h, double off,
                 double dt, std::span<cplx> out) {
  p == ExecPolicy::parallel ? omp::cn_explicit(psi, h, off, dt, out) : serial::cn_explicit(psi, h, off, dt, out);
}

double trapezoid_norm(ExecPolicy p, std::span<const cplx> psi, double dx) {
  return p == ExecPolicy::parallel ? omp::trapezoid_norm(psi, dx) : serial::trapezoid_norm(psi, dx);
}

cplx trapezoid_overlap(ExecPolicy p, std::span<const cplx> bra, std::span<const cplx> ket, double dx) {
  return p == ExecPolicy::parallel ? omp::trapezoid_overlap(bra, ket, dx) : serial::trapezoid_overlap(bra, ket, dx);
}

Moments moments(ExecPolicy p, std::span<const cplx> psi, double x_min, double dx) {
  return p == ExecPolicy::parallel ? omp::moments(psi, x_min, dx) : serial::moments(psi, x_min, dx);
}

double max_abs_diff(ExecPolicy p, std::span<const cplx> a, std::span<const cplx> b) {
  return p == ExecPolicy::parallel ? omp::max_abs_diff(a, b) : serial::max_abs_diff(a, b);
}

double max_density(ExecPolicy p, std::span<const cplx> psi) {
  return p == ExecPolicy::parallel ? omp::max_density(psi) : serial::max_density(psi);
}

}  // namespace solsta::kernels
