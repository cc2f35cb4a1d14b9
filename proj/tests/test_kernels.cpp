#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "solsta/kernels.hpp"

using namespace solsta;
using namespace solsta::kernels;

namespace {

std::vector<cplx> random_field(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

std::vector<double> random_real(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

// Sizes straddle the reduction block to hit the ragged last block.
TEST_CASE("pointwise kernels are bit-identical between serial and omp") {
  for (std::size_t n : {17u, 512u, 1000u, 4099u}) {
    const auto psi = random_field(n, 1);
    const auto it = random_field(n, 2);
    const auto v = random_real(n, 3);
    std::vector<double> r1(n), r2(n);
    serial::density(psi, r1);
    omp::density(psi, r2);
    CHECK(r1 == r2);

    std::vector<double> h1(n), h2(n);
    serial::hamiltonian_diag(v, r1, it, 2.5, 1.7, h1);
    omp::hamiltonian_diag(v, r1, it, 2.5, 1.7, h2);
    CHECK(h1 == h2);
    serial::hamiltonian_diag(v, r1, {}, 2.5, 1.7, h1);
    omp::hamiltonian_diag(v, r1, {}, 2.5, 1.7, h2);
    CHECK(h1 == h2);

    std::vector<cplx> o1(n), o2(n);
    serial::cn_explicit(psi, h1, -0.3, 1e-3, o1);
    omp::cn_explicit(psi, h1, -0.3, 1e-3, o2);
    CHECK(o1 == o2);

    CHECK(serial::max_abs_diff(psi, it) == omp::max_abs_diff(psi, it));
    CHECK(serial::max_density(psi) == omp::max_density(psi));
  }
}

TEST_CASE("reductions agree between serial and omp") {
  for (std::size_t n : {17u, 512u, 1000u, 4099u}) {
    const auto psi = random_field(n, 4);
    const auto phi = random_field(n, 5);
    const double dx = 0.01;
    CHECK(omp::trapezoid_norm(psi, dx) == doctest::Approx(serial::trapezoid_norm(psi, dx)).epsilon(1e-13));
    const cplx a = serial::trapezoid_overlap(psi, phi, dx);
    const cplx b = omp::trapezoid_overlap(psi, phi, dx);
    CHECK(std::abs(a - b) <= 1e-13 * std::abs(a) + 1e-15);
    const Moments m1 = serial::moments(psi, -3.0, dx);
    const Moments m2 = omp::moments(psi, -3.0, dx);
    CHECK(m2.mass == doctest::Approx(m1.mass).epsilon(1e-13));
    CHECK(m2.mean == doctest::Approx(m1.mean).epsilon(1e-12));
    CHECK(m2.var == doctest::Approx(m1.var).epsilon(1e-12));
  }
}

TEST_CASE("trapezoid rule weights the end points by one half") {
  const std::vector<cplx> ones(11, cplx{1.0, 0.0});
  CHECK(serial::trapezoid_norm(ones, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(omp::trapezoid_norm(ones, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<cplx> i_ones(11, cplx{0.0, 1.0});
  CHECK(std::abs(serial::trapezoid_overlap(ones, i_ones, 0.1) - cplx{0.0, 1.0}) < 1e-15);
}

TEST_CASE("moments of a symmetric box density") {
  // uniform density on [-1, 1]: mean 0, variance 1/3 (trapezoid-exact for a constant)
  const std::size_t n = 20001;
  const std::vector<cplx> ones(n, cplx{1.0, 0.0});
  const double dx = 2.0 / static_cast<double>(n - 1);
  const Moments m = serial::moments(ones, -1.0, dx);
  CHECK(m.mass == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(std::abs(m.mean) < 1e-13);
  CHECK(m.var == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("implicit solve inverts the tridiagonal operator") {
  const std::size_t n = 1500;
  const auto h = random_real(n, 6);
  const auto rhs = random_field(n, 7);
  const double off = -0.8, dt = 0.05;
  std::vector<cplx> x(n), scratch(n);
  cn_implicit_solve(h, off, dt, rhs, x, scratch);
  CHECK(x.front() == cplx{});
  CHECK(x.back() == cplx{});
  const cplx ih{0.0, 0.5 * dt};
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const cplx lhs = (1.0 + ih * h[j]) * x[j] + ih * off * (x[j - 1] + x[j + 1]);
    worst = std::max(worst, std::abs(lhs - rhs[j]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("policy dispatch routes to the matching implementation") {
  const auto psi = random_field(3000, 8);
  CHECK(trapezoid_norm(ExecPolicy::serial, psi, 0.1) == serial::trapezoid_norm(psi, 0.1));
  CHECK(trapezoid_norm(ExecPolicy::parallel, psi, 0.1) == omp::trapezoid_norm(psi, 0.1));
  CHECK(max_density(ExecPolicy::parallel, psi) == serial::max_density(psi));
}
