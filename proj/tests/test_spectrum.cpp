#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/graph.hpp"
#include "casimir/spectrum.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {

Graph nn_interval(double a = 1.0) {
  return build_star(1, {a}, {BoundaryKind::Neumann});
}

Graph fig3_graph(bool dirichlet_first = false) {
  std::vector<BoundaryKind> kinds(4, BoundaryKind::Neumann);
  if (dirichlet_first) kinds[0] = BoundaryKind::Dirichlet;
  return build_star(4, {1.1, 1.6176, 1.2985, 1.1159}, kinds);
}

}  // namespace

TEST_CASE("U(omega) is unitary") {
  Graph g = fig3_graph();
  for (double omega : {0.37, 1.0, 7.3, 42.1}) {
    Eigen::MatrixXcd u = unitary_at(g, omega);
    Eigen::MatrixXcd id = u * u.adjoint();
    CHECK((id - Eigen::MatrixXcd::Identity(id.rows(), id.cols())).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("det(I - U) vanishes exactly on the spectrum") {
  Graph nn = nn_interval();
  Graph dn = build_interval(1.0, BoundaryKind::Dirichlet, BoundaryKind::Neumann);
  auto secdet = [](const Graph& g, double w) {
    Eigen::MatrixXcd u = unitary_at(g, w);
    return std::abs((Eigen::MatrixXcd::Identity(u.rows(), u.cols()) - u).determinant());
  };
  for (int n = 1; n <= 4; ++n) {
    CHECK(secdet(nn, n * pi) < 1e-12);
    CHECK(secdet(dn, (2 * n - 1) * pi / 2) < 1e-12);
  }
  CHECK(secdet(nn, 0.77 * pi) > 0.1);
}

TEST_CASE("NN interval spectrum is n pi / a") {
  Spectrum s = compute_spectrum(nn_interval(), 10.0, 1e-10);
  REQUIRE(s.modes.size() == 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(s.modes[n - 1].omega == doctest::Approx(n * pi).epsilon(1e-9));
    CHECK(s.modes[n - 1].multiplicity == 1);
  }
}

TEST_CASE("DN interval spectrum is (2n+1) pi / 2a") {
  Graph g = build_interval(1.0, BoundaryKind::Dirichlet, BoundaryKind::Neumann);
  Spectrum s = compute_spectrum(g, 9.0, 1e-10);
  REQUIRE(s.modes.size() == 3);
  for (int n = 0; n < 3; ++n)
    CHECK(s.modes[n].omega == doctest::Approx((2 * n + 1) * pi / 2).epsilon(1e-9));
}

TEST_CASE("equal star degeneracies") {
  Graph g = build_star(5, std::vector<double>(5, 1.0),
                       std::vector<BoundaryKind>(5, BoundaryKind::Neumann));
  Spectrum s = compute_spectrum(g, 7.0, 1e-10);
  REQUIRE(s.modes.size() >= 4);
  CHECK(s.modes[0].omega == doctest::Approx(pi / 2).epsilon(1e-9));
  CHECK(s.modes[0].multiplicity == 4);  // B - 1 independent solutions
  CHECK(s.modes[1].omega == doctest::Approx(pi).epsilon(1e-9));
  CHECK(s.modes[1].multiplicity == 1);
  CHECK(s.modes[2].multiplicity == 4);

  // the pattern is (B-1, 1, B-1, 1, ...) for any equal all-Neumann star
  Graph g7 = build_star(7, std::vector<double>(7, 1.0),
                        std::vector<BoundaryKind>(7, BoundaryKind::Neumann));
  Spectrum s7 = compute_spectrum(g7, 7.0, 1e-10);
  REQUIRE(s7.modes.size() >= 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(s7.modes[i].omega == doctest::Approx((i + 1) * pi / 2).epsilon(1e-9));
    CHECK(s7.modes[i].multiplicity == (i % 2 == 0 ? 6 : 1));
  }
}

TEST_CASE("valence-2 Kirchhoff vertex is invisible") {
  Graph star2 = build_star(2, {1.0, 1.0},
                           {BoundaryKind::Neumann, BoundaryKind::Neumann});
  Graph interval = nn_interval(2.0);
  Spectrum a = compute_spectrum(star2, 12.0, 1e-10);
  Spectrum b = compute_spectrum(interval, 12.0, 1e-10);
  REQUIRE(a.modes.size() == b.modes.size());
  for (size_t i = 0; i < a.modes.size(); ++i) {
    CHECK(a.modes[i].omega == doctest::Approx(b.modes[i].omega).epsilon(1e-9));
    CHECK(a.modes[i].multiplicity == b.modes[i].multiplicity);
  }
}

TEST_CASE("secular function for stars") {
  Graph one = nn_interval();
  for (double w : {0.3, 1.1, 2.9})
    CHECK(secular_star(one, w) == doctest::Approx(std::sin(w)).epsilon(1e-14));

  // Dirichlet piston: zeros shift to the cosine set
  Graph dn = build_star(1, {1.0}, {BoundaryKind::Dirichlet});
  CHECK(secular_star(dn, pi / 2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(secular_star(dn, pi)) > 0.5);

  Graph star2 = build_star(2, {1.0, 1.0},
                           {BoundaryKind::Neumann, BoundaryKind::Neumann});
  CHECK(secular_star(star2, pi / 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(secular_star(star2, pi) == doctest::Approx(0.0).epsilon(1e-12));

  Graph tri = Graph::assemble(
      {{"a", BoundaryKind::Kirchhoff}, {"b", BoundaryKind::Kirchhoff}, {"c", BoundaryKind::Kirchhoff}},
      {{"ab", "a", "b", 1.0}, {"bc", "b", "c", 1.2}, {"ca", "c", "a", 1.4}});
  CHECK_THROWS_AS(secular_star(tri, 1.0), Error);
}

TEST_CASE("lowest secular zero matches the computed spectrum") {
  Graph g = fig3_graph();
  Spectrum s = compute_spectrum(g, 2.0, 1e-12);
  REQUIRE(!s.modes.empty());
  double w0 = s.modes[0].omega;
  // bracket the lowest sign change of F and bisect
  double lo = 0.05, hi = 0.05;
  double flo = secular_star(g, lo);
  for (double w = 0.06; w < 2.0; w += 0.01) {
    double f = secular_star(g, w);
    if (flo * f < 0) { hi = w; break; }
    lo = w; flo = f;
  }
  REQUIRE(hi > lo);
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    if (secular_star(g, mid) * flo <= 0) hi = mid; else { lo = mid; flo = secular_star(g, lo); }
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(w0).epsilon(1e-8));
}

TEST_CASE("Weyl counting bound") {
  Graph g = fig3_graph();
  Spectrum s = compute_spectrum(g, 200.0, 1e-9);
  CHECK(weyl_max_deviation(s, g.total_length()) <= 2.0 * g.bond_count());
  // the smooth term tracks the count closely: deviation is O(1), not O(B)
  CHECK(weyl_max_deviation(s, g.total_length()) < 4.0);
}

TEST_CASE("spectrum CSV shape") {
  Spectrum s = compute_spectrum(nn_interval(), 7.0, 1e-10);
  std::string csv = spectrum_to_csv(s);
  CHECK(csv.substr(0, 22) == "n,omega,multiplicity\n1");
  CHECK(csv.find("3.14159265") != std::string::npos);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(compute_spectrum(nn_interval(), -1.0, 1e-10), Error);
  CHECK_THROWS_AS(compute_spectrum(nn_interval(), 10.0, 0.0), Error);
}
