#include <doctest.h>

#include <cmath>

#include "solsta/adiabatic.hpp"

using namespace solsta;

namespace {

SwitchingParams fig2() {
  SwitchingParams p;
  p.t_f = 10.0;
  p.s_rate = 10.0;
  return p;
}

double quartic_residual(double a, double g, const PhysicalConfig& c) {
  return kPi * kPi * c.omega * c.omega * std::pow(a, 4) + g * c.n_norm * a - 1.0;
}

}  // namespace

// Reference values below were computed at 30 digits with an independent
// arbitrary-precision script.
TEST_CASE("switching edges and reference widths at the default parameters") {
  const SwitchingParams p;  // g_base 2, A_s 10, s 1, t_f 100
  const PhysicalConfig c;   // omega 0.04, N 1
  const auto [g0, gf] = g_edges(p);
  CHECK(g0 == doctest::Approx(2.02026396297559760).epsilon(1e-14));
  CHECK(gf == doctest::Approx(11.9797360370244024).epsilon(1e-14));
  CHECK(switching_g(0.0, p) == doctest::Approx(g0).epsilon(1e-14));
  CHECK(switching_g(p.t_f, p) == doctest::Approx(gf).epsilon(1e-14));
  CHECK(ac_perturbative(g0, c) == doctest::Approx(0.494515600098361614).epsilon(1e-12));
  CHECK(ac_perturbative(gf, c) == doctest::Approx(0.0834742293319413740).epsilon(1e-12));
  CHECK(ac_exact(2.02026, c) == doctest::Approx(0.494518336483714207).epsilon(1e-12));
}

TEST_CASE("kepler potential values") {
  PhysicalConfig free;
  free.omega = 0.0;
  CHECK(kepler_potential(1.0, 0.0, free) == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-15));
  const PhysicalConfig c;
  const double g0 = g_edges(SwitchingParams{}).first;
  CHECK(kepler_potential(1e-3, g0, c) == doctest::Approx(201823.585).epsilon(1e-8));
  CHECK(kepler_potential(1e3, g0, c) == doctest::Approx(3199.99918).epsilon(1e-8));
  const double ac = ac_exact(g0, c);
  CHECK(kepler_potential(ac, g0, c) == doctest::Approx(-0.826294739).epsilon(1e-8));
  // The exact root is the minimum of U.
  CHECK(kepler_potential(ac * 1.001, g0, c) > kepler_potential(ac, g0, c));
  CHECK(kepler_potential(ac * 0.999, g0, c) > kepler_potential(ac, g0, c));
}

TEST_CASE("exact root satisfies the quartic") {
  for (double w : {0.0, 0.04, 0.3, 1.0}) {
    PhysicalConfig c;
    c.omega = w;
    for (double g : {0.2, 2.0, 12.0, 50.0}) {
      const double a = ac_exact(g, c);
      CHECK(a > 0.0);
      CHECK(std::abs(quartic_residual(a, g, c)) < 1e-12);
    }
  }
}

TEST_CASE("exact root agrees with plain bisection") {
  PhysicalConfig c;
  c.omega = 0.7;
  for (double g : {0.5, 3.0, 20.0}) {
    // the quartic is increasing on a > 0, so [0, 1/(gN)] brackets the root
    double lo = 0.0, hi = 1.0 / (g * c.n_norm);
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      (quartic_residual(mid, g, c) < 0.0 ? lo : hi) = mid;
    }
    CHECK(ac_exact(g, c) == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
  }
}

TEST_CASE("perturbative width error scales as omega to the fourth") {
  const double g = 2.0;
  auto err = [g](double w) {
    PhysicalConfig c;
    c.omega = w;
    return std::abs(ac_perturbative(g, c) - ac_exact(g, c));
  };
  const double ratio = err(0.04) / err(0.02);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
  // and at the working point it is far below the 1e-3 design tolerance
  CHECK(err(0.04) < 1e-5);
}

TEST_CASE("reference widths require a positive nonlinearity") {
  const PhysicalConfig c;
  CHECK_THROWS_AS(ac_perturbative(0.0, c), DomainError);
  CHECK_THROWS_AS(ac_perturbative(-1.0, c), DomainError);
  // a trap still binds a repulsive condensate, free space does not
  CHECK(std::abs(quartic_residual(ac_exact(-1.0, c), -1.0, c)) < 1e-12);
  PhysicalConfig free;
  free.omega = 0.0;
  CHECK_THROWS_AS(ac_exact(-1.0, free), NoRootError);
}

TEST_CASE("reference trajectory starts and ends at the edge widths") {
  const PhysicalConfig c;
  for (auto method : {ReferenceMethod::perturbative, ReferenceMethod::exact}) {
    const SwitchingParams p = fig2();
    const auto tr = ac_trajectory(p, c, 1001, method);
    const auto [g0, gf] = g_edges(p);
    CHECK(tr.t.front() == 0.0);
    CHECK(tr.t.back() == p.t_f);
    CHECK(tr.a.front() == doctest::Approx(ac_reference(g0, c, method)).epsilon(1e-12));
    CHECK(tr.a.back() == doctest::Approx(ac_reference(gf, c, method)).epsilon(1e-12));
    // g increases monotonically so a_c decreases monotonically
    for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr.a[i] < tr.a[i - 1]);
  }
}

TEST_CASE("reference derivatives match finite differences") {
  const PhysicalConfig c;
  const SwitchingParams p = fig2();
  for (auto method : {ReferenceMethod::perturbative, ReferenceMethod::exact}) {
    for (double t : {2.0, 4.9, 5.0, 5.3, 8.0}) {
      const double h = 1e-5;
      const auto m = ac_at(t - h, p, c, method);
      const auto z = ac_at(t, p, c, method);
      const auto q = ac_at(t + h, p, c, method);
      CHECK(z.adot == doctest::Approx((q.a - m.a) / (2 * h)).epsilon(1e-6).scale(1.0));
      CHECK(z.addot == doctest::Approx((q.adot - m.adot) / (2 * h)).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("reference edge derivatives are small at the design parameters") {
  const PhysicalConfig c;
  const auto start = ac_at(0.0, fig2(), c, ReferenceMethod::perturbative);
  const auto end = ac_at(10.0, fig2(), c, ReferenceMethod::perturbative);
  CHECK(start.adot == doctest::Approx(-9.8824e-4).epsilon(1e-4));
  CHECK(end.adot == doctest::Approx(-2.8239e-5).epsilon(1e-4));
  CHECK(std::abs(start.adot) < 1e-2);
  CHECK(std::abs(end.adot) < 1e-2);
}

TEST_CASE("switching derivatives match finite differences") {
  const SwitchingParams p = fig2();
  for (double t : {0.0, 3.0, 5.0, 5.05, 9.5}) {
    const double h = 1e-5;
    CHECK(switching_gdot(t, p) ==
          doctest::Approx((switching_g(t + h, p) - switching_g(t - h, p)) / (2 * h)).epsilon(1e-6));
    CHECK(switching_gddot(t, p) ==
          doctest::Approx((switching_gdot(t + h, p) - switching_gdot(t - h, p)) / (2 * h)).epsilon(1e-4));
  }
}

TEST_CASE("switching parameters are validated") {
  SwitchingParams p;
  p.t_f = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = SwitchingParams{};
  p.s_rate = -1.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = SwitchingParams{};
  p.g_base = std::nan("");
  CHECK_THROWS_AS(p.validate(), ConfigError);
}
