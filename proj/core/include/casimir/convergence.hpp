#pragma once

#include <string>
#include <vector>

#include "casimir/energy.hpp"
#include "casimir/graph.hpp"
#include "casimir/orbits.hpp"

namespace casimir {

struct ConvergencePoint {
  double l_max = 0.0;
  double energy = 0.0;
  double abs_error = 0.0;
};

/// Error-vs-cutoff series for the truncated orbit expansion, with the length
/// shell contributions D_n and a log-log least-squares decay exponent.
struct ConvergenceStudy {
  std::vector<ConvergencePoint> grid;       // strictly increasing in l_max
  double bin_width = 0.0;                   // shell width Delta
  std::vector<double> shell_contributions;  // D_n, energy per length bin
  double fitted_slope = 0.0;
  double fit_residual = 0.0;
};

/// Runs one enumeration to the largest cutoff and evaluates the truncated
/// orbit energy at every grid point; errors are against `reference` (which
/// must come from a pipeline at tighter tolerance: ReferenceTooCoarse if its
/// error estimate exceeds 10% of the smallest grid error). D_n bins cover
/// [grid.front() + n Delta, grid.front() + (n+1) Delta). The slope fit
/// excludes points whose error is below 10x the reference error estimate.
ConvergenceStudy convergence_study(const Graph& g,
                                   const std::vector<double>& l_grid,
                                   const EnergyResult& reference, double delta,
                                   std::uint64_t node_budget = 100000000);

/// CSV with header L_max,E_c,abs_error.
std::string convergence_to_csv(const ConvergenceStudy& study);

}  // namespace casimir
