#pragma once

#include <string>
#include <vector>

#include "casimir/graph.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

struct Mode {
  double omega = 0.0;
  int multiplicity = 1;
};

/// Sorted normal-mode frequencies in (0, omega_max]; omega = 0 is excluded
/// (it carries no vacuum energy). Roots closer than cluster_tol are merged
/// with summed multiplicity.
struct Spectrum {
  std::vector<Mode> modes;
  double omega_max = 0.0;
  double tol = 0.0;
  double cluster_tol = 0.0;
  std::string method = "eigenphase";

  int mode_count() const {
    int n = 0;
    for (const Mode& m : modes) n += m.multiplicity;
    return n;
  }
};

/// Finds every omega in (0, omega_max] where U(omega) = S D(omega) has
/// eigenvalue 1, with multiplicity equal to the number of unit eigenvalues
/// crossing. Eigenphase crossings of the unit circle are counted per scan
/// step from the total-phase balance (the winding of det U is 2 L omega
/// exactly), then localized by bisection to absolute accuracy `tol`.
/// Throws ConvergenceFailure when a step's crossing count cannot be
/// established at the configured grid resolution.
Spectrum compute_spectrum(const Graph& g, double omega_max, double tol);

/// Pole-free secular function for a piston star:
///   F(omega) = sum_j sin(omega L_j + phi_j) prod_{i != j} cos(omega L_i + phi_i)
/// with phi_j = 0 for a Neumann piston and pi/2 for a Dirichlet one (the
/// tan-shift equivalent of the Dirichlet reflection phase). Zeros of F away
/// from simultaneous cosine zeros coincide with spectrum points.
double secular_star(const Graph& g, double omega);

/// max over omega in (0, omega_max] of |N(omega) - L omega / pi|, evaluated
/// exactly from the step structure of the counting function.
double weyl_max_deviation(const Spectrum& spec, double total_length);

/// CSV with header n,omega,multiplicity and rows in ascending omega.
std::string spectrum_to_csv(const Spectrum& spec);

}  // namespace casimir
