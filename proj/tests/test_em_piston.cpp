#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/closed_form.hpp"
#include "casimir/em_piston.hpp"

using namespace casimir;
using std::numbers::pi;

TEST_CASE("printed pressure formulas") {
  CHECK(conducting_pressure_inside(1.0) == doctest::Approx(-0.0411233517).epsilon(1e-9));
  CHECK(permeable_pressure_inside(1.0) == doctest::Approx(0.0359829327).epsilon(1e-9));
  CHECK(shaft_pressure(1.0) == doctest::Approx(0.0381652331).epsilon(1e-9));
  // Catalan constant carries the paper's six printed digits
  CHECK(std::floor(kCatalan * 1e6) / 1e6 == 0.915965);

  // 1/length^4 scaling
  CHECK(conducting_pressure_inside(2.0) ==
        doctest::Approx(conducting_pressure_inside(1.0) / 16).epsilon(1e-14));
  CHECK(shaft_pressure(2.0) == doctest::Approx(shaft_pressure(1.0) / 16).epsilon(1e-14));
  CHECK(permeable_pressure_inside(1e3) < 1e-10);
  for (double a : {0.2, 1.0, 5.0}) CHECK(conducting_pressure_inside(a) < 0.0);
}

TEST_CASE("permeable/conducting ratio is exactly -7/8") {
  for (double a : {0.1, 0.3, 1.0, 2.7, 10.0})
    CHECK(permeable_pressure_inside(a) == -(7.0 / 8.0) * conducting_pressure_inside(a));
}

TEST_CASE("Rayleigh-Dowker relation") {
  // constant energy: no mixed-wall correction
  CHECK(rayleigh_dowker([](double) { return 3.5; }, 1.0) == 0.0);
  // E = c / a^3: factor (1/8 - 1) = -7/8
  double c = 2.0;
  CHECK(rayleigh_dowker([&](double a) { return c / (a * a * a); }, 1.0) ==
        doctest::Approx(-7.0 * c / 8.0).epsilon(1e-14));

  // the 1D consistency check: NN energies reproduce the DN interval
  auto e_nn = [](double a) {
    return interval_energy({a, BoundaryKind::Neumann, BoundaryKind::Neumann});
  };
  auto f_nn = [](double a) {
    return interval_force({a, BoundaryKind::Neumann, BoundaryKind::Neumann});
  };
  for (int i = 1; i <= 10; ++i) {
    double a = 0.25 * i;
    CHECK(std::abs(rayleigh_dowker(e_nn, a) -
                   interval_energy({a, BoundaryKind::Dirichlet, BoundaryKind::Neumann})) <
          1e-12);
    CHECK(std::abs(rayleigh_dowker_force(f_nn, a) -
                   interval_force({a, BoundaryKind::Dirichlet, BoundaryKind::Neumann})) <
          1e-12);
  }
}

TEST_CASE("net piston force and regime flag") {
  PistonForce close = piston_net_force({0.1, 1.0});
  CHECK(close.force == doctest::Approx(359.7911).epsilon(1e-5));
  CHECK(close.force > 0.0);
  CHECK(close.in_regime);

  PistonForce cube = piston_net_force({1.0, 1.0});
  CHECK(cube.force < 0.0);
  CHECK(!cube.in_regime);  // formulas not claimed at a ~ b
}

TEST_CASE("sign crossover in a") {
  // bisection oracle for 7 pi^2/(1920 a^4) = G/24 at b = 1
  auto f = [](double a) { return piston_net_force({a, 1.0}).force; };
  double lo = 0.5, hi = 1.5;
  REQUIRE(f(lo) > 0.0);
  REQUIRE(f(hi) < 0.0);
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  double a_star = 0.5 * (lo + hi);
  CHECK(a_star == doctest::Approx(0.985387750944).epsilon(1e-9));
  // strictly decreasing in a at fixed b, so the crossing is unique
  double prev = f(0.3);
  for (double a = 0.4; a < 2.01; a += 0.1) {
    double v = f(a);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(f(1.1 * a_star) < 0.0);
}
