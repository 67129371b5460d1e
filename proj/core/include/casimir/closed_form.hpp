#pragma once

#include "casimir/graph.hpp"

namespace casimir {

/// Interval of length a with piston conditions at both ends.
struct IntervalSpec {
  double a = 1.0;
  BoundaryKind left = BoundaryKind::Neumann;
  BoundaryKind right = BoundaryKind::Neumann;
};

/// Renormalized vacuum energy of the interval: -pi/(24 a) for NN or DD,
/// +pi/(48 a) for mixed ends. (DD differs from NN only by the absent zero
/// mode, which carries no energy.)
double interval_energy(const IntervalSpec& spec);

/// Piston force -dE/da; positive = repulsive.
double interval_force(const IntervalSpec& spec);

/// Equal-length all-Neumann Kirchhoff star: E_c = (B - 3) pi / (48 a).
double star_energy_equal(int num_bonds, double a);

/// Collective force when all B pistons move together: (B - 3) pi / (48 a^2).
double star_collective_force_equal(int num_bonds, double a);

/// Per-piston share of the collective force (symmetry division by B).
double star_per_piston_force_equal(int num_bonds, double a);

/// Equal-length all-Dirichlet star: the mode families of the Neumann case
/// swap roles, giving E_c = (3 - 2B) pi / (48 a). Derived here, not printed
/// in closed form anywhere; validated against the spectral pipeline.
double dirichlet_star_energy_equal(int num_bonds, double a);
double dirichlet_star_collective_force_equal(int num_bonds, double a);
double dirichlet_star_per_piston_force_equal(int num_bonds, double a);

/// Dilogarithm Li2(x) = sum_{r>=1} x^r / r^2 for |x| <= 1, to 1e-14 absolute
/// accuracy (direct series for |x| <= 1/2, reflection / Landen identities
/// otherwise). Throws DomainError for |x| > 1.
double dilog(double x);

/// Real part of Li2 on the unit circle, Re Li2(e^{i theta}); closed form
/// pi^2/6 - theta (2 pi - theta) / 4 for theta in [0, 2 pi].
double dilog_unit_circle_real(double theta);

/// Two-term 1/B expansion of the all-Neumann shortest-orbit energy:
///   (pi/48) (1 - 24 ln 2 / (pi^2 B)) * sum_j 1/a_j.
double shortest_energy_expansion(int num_bonds, double inv_length_sum);

}  // namespace casimir
