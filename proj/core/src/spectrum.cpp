#include "casimir/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/format.hpp"

namespace casimir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Eigenphases of U(omega), each mapped to [0, 2pi), plus their sum.
class PhaseScanner {
 public:
  PhaseScanner(const Graph& g)
      : graph_(g), scattering_(assemble_global_scattering(g)) {}

  struct Sample {
    double omega;
    double phase_sum;
  };

  Sample at(double omega) {
    Eigen::MatrixXcd u = unitary_at(scattering_, graph_, omega);
    solver_.compute(u, /*computeEigenvectors=*/false);
    double sum = 0.0;
    for (int i = 0; i < u.rows(); ++i) {
      double ph = std::arg(solver_.eigenvalues()(i));
      if (ph < 0) ph += kTwoPi;
      sum += ph;
    }
    return Sample{omega, sum};
  }

 private:
  const Graph& graph_;
  GlobalScattering scattering_;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver_;
};

}  // namespace

Spectrum compute_spectrum(const Graph& g, double omega_max, double tol) {
  if (!(omega_max > 0.0)) fail(ErrorCode::DomainError, "omega_max must be > 0");
  if (!(tol > 0.0)) fail(ErrorCode::DomainError, "tol must be > 0");

  const double total_len = g.total_length();
  const double winding_rate = 2.0 * total_len;  // d/domega of sum of phases
  PhaseScanner scanner(g);

  // Crossings of the unit circle in (a, b]: every eigenphase advances by at
  // most L_max*(b-a) < 2pi at the scan step below, so the count is fixed by
  // the exactly-known total winding minus the wrapped phase-sum change.
  auto crossings = [&](const PhaseScanner::Sample& a,
                       const PhaseScanner::Sample& b) -> int {
    double expected = winding_rate * (b.omega - a.omega);
    double observed = b.phase_sum - a.phase_sum;
    double w = (expected - observed) / kTwoPi;
    double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.01 || rounded < -0.1)
      fail(ErrorCode::ConvergenceFailure,
           "eigenphase crossing count not resolvable near omega = " +
               std::to_string(a.omega));
    return static_cast<int>(rounded);
  };

  std::vector<Mode> roots;
  // recursive bisection of a bracket known to hold `count` crossings
  auto refine = [&](auto&& self, const PhaseScanner::Sample& a,
                    const PhaseScanner::Sample& b, int count) -> void {
    if (count == 0) return;
    if (b.omega - a.omega <= tol) {
      roots.push_back(Mode{0.5 * (a.omega + b.omega), count});
      return;
    }
    PhaseScanner::Sample mid = scanner.at(0.5 * (a.omega + b.omega));
    int left = crossings(a, mid);
    self(self, a, mid, left);
    self(self, mid, b, count - left);
  };

  const double step = std::numbers::pi / (4.0 * total_len);
  // Start just above zero: the omega = 0 eigenvalue-1 states move off the
  // unit-circle crossing point immediately and must not be counted.
  const double omega_start = std::min(1e-4 * std::numbers::pi / total_len, tol);
  PhaseScanner::Sample a = scanner.at(omega_start);
  while (a.omega < omega_max) {
    double next = std::min(a.omega + step, omega_max);
    PhaseScanner::Sample b = scanner.at(next);
    int count = crossings(a, b);
    if (count > 0) refine(refine, a, b, count);
    a = b;
  }

  Spectrum spec;
  spec.omega_max = omega_max;
  spec.tol = tol;
  spec.cluster_tol = 10.0 * tol;
  for (const Mode& m : roots) {
    if (!spec.modes.empty() &&
        m.omega - spec.modes.back().omega < spec.cluster_tol)
      spec.modes.back().multiplicity += m.multiplicity;
    else
      spec.modes.push_back(m);
  }
  return spec;
}

double secular_star(const Graph& g, double omega) {
  StarView sv = star_view(g);
  const int B = g.bond_count();
  double f = 0.0;
  for (int j = 0; j < B; ++j) {
    double phi_j =
        sv.piston_kind[j] == BoundaryKind::Dirichlet ? std::numbers::pi / 2 : 0.0;
    double term = std::sin(omega * sv.leg_length[j] + phi_j);
    for (int i = 0; i < B; ++i) {
      if (i == j) continue;
      double phi_i = sv.piston_kind[i] == BoundaryKind::Dirichlet
                         ? std::numbers::pi / 2
                         : 0.0;
      term *= std::cos(omega * sv.leg_length[i] + phi_i);
    }
    f += term;
  }
  return f;
}

double weyl_max_deviation(const Spectrum& spec, double total_length) {
  const double density = total_length / std::numbers::pi;
  double max_dev = 0.0;
  int count = 0;
  for (const Mode& m : spec.modes) {
    // just below the jump and just above it
    max_dev = std::max(max_dev, std::abs(count - density * m.omega));
    count += m.multiplicity;
    max_dev = std::max(max_dev, std::abs(count - density * m.omega));
  }
  max_dev = std::max(max_dev, std::abs(count - density * spec.omega_max));
  return max_dev;
}

std::string spectrum_to_csv(const Spectrum& spec) {
  std::ostringstream os;
  os << "n,omega,multiplicity\n";
  int n = 0;
  for (const Mode& m : spec.modes) {
    ++n;
    os << n << ',' << fmt_g9(m.omega) << ',' << m.multiplicity << '\n';
  }
  return os.str();
}

}  // namespace casimir
