#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/closed_form.hpp"
#include "casimir/convergence.hpp"
#include "casimir/graph.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {

EnergyResult analytic_reference(double value) {
  EnergyResult ref;
  ref.value = value;
  ref.error_estimate = 0.0;
  ref.method = Method::analytic;
  return ref;
}

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> g;
  for (double v = lo; v <= hi + 1e-9; v += step) g.push_back(v);
  return g;
}

}  // namespace

TEST_CASE("single bond, alternating repetition tail") {
  // DN interval: only repetitions truncate; the alternating polylog tail
  // decays one power faster than the NN case
  Graph dn = build_star(1, {1.0}, {BoundaryKind::Dirichlet});
  ConvergenceStudy s = convergence_study(dn, arange(10, 40, 2),
                                         analytic_reference(pi / 48), 2.0);
  CHECK(s.fitted_slope == doctest::Approx(-1.89).epsilon(0.06));
  CHECK(s.fitted_slope < -1.7);

  Graph nn = build_star(1, {1.0}, {BoundaryKind::Neumann});
  ConvergenceStudy snn = convergence_study(nn, arange(10, 40, 2),
                                           analytic_reference(-pi / 24), 2.0);
  CHECK(snn.fitted_slope == doctest::Approx(-0.95).epsilon(0.08));

  // errors decrease along the grid and D_n bins reproduce the energy steps
  for (size_t i = 1; i < s.grid.size(); ++i)
    CHECK(s.grid[i].abs_error < s.grid[i - 1].abs_error);
}

TEST_CASE("shell bins account for the grid increments") {
  Graph nn = build_star(1, {1.0}, {BoundaryKind::Neumann});
  std::vector<double> grid = arange(10, 20, 2);
  ConvergenceStudy s =
      convergence_study(nn, grid, analytic_reference(-pi / 24), 2.0);
  // sum of D_n over the covered range equals E(end) - E(front)
  double dsum = 0.0;
  for (double d : s.shell_contributions) dsum += d;
  CHECK(dsum == doctest::Approx(s.grid.back().energy - s.grid.front().energy)
                    .epsilon(1e-12));
  CHECK(s.bin_width == 2.0);
}

TEST_CASE("reference quality is enforced") {
  Graph nn = build_star(1, {1.0}, {BoundaryKind::Neumann});
  EnergyResult coarse = analytic_reference(-pi / 24);
  coarse.error_estimate = 0.05;  // worse than every grid error
  CHECK_THROWS_AS(convergence_study(nn, arange(10, 20, 2), coarse, 2.0), Error);
  try {
    convergence_study(nn, arange(10, 20, 2), coarse, 2.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReferenceTooCoarse);
  }
}

TEST_CASE("grid validation") {
  Graph nn = build_star(1, {1.0}, {BoundaryKind::Neumann});
  CHECK_THROWS_AS(convergence_study(nn, {10.0}, analytic_reference(-pi / 24), 1.0),
                  Error);
  CHECK_THROWS_AS(convergence_study(nn, {10.0, 10.0}, analytic_reference(-pi / 24), 1.0),
                  Error);
  CHECK_THROWS_AS(convergence_study(nn, {10.0, 12.0}, analytic_reference(-pi / 24), 0.0),
                  Error);
}

TEST_CASE("CSV schema") {
  Graph nn = build_star(1, {1.0}, {BoundaryKind::Neumann});
  ConvergenceStudy s =
      convergence_study(nn, {10.0, 12.0}, analytic_reference(-pi / 24), 1.0);
  std::string csv = convergence_to_csv(s);
  CHECK(csv.rfind("L_max,E_c,abs_error\n10,", 0) == 0);
}
