#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/graph.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {

enum class Method { spectral, orbit, analytic, transfer };

const char* method_name(Method m);

/// A vacuum-energy value (units 1/length) with the method that produced it,
/// a nonnegative error estimate, and the parameters needed to reproduce it.
struct EnergyResult {
  double value = 0.0;
  double error_estimate = 0.0;
  Method method = Method::analytic;
  std::map<std::string, double> parameters;
};

/// Per-bond piston forces (units 1/length^2). Positive = repulsive: the
/// piston is pushed outward, force = -dE_c/dL_j.
struct ForceResult {
  std::map<std::string, double> force_per_bond;
  Method method = Method::analytic;
};

/// Trace of the cylinder kernel over the computed modes,
/// sum_n mult_n e^{-omega_n t} (zero mode excluded). Requires the spectrum
/// cutoff to cover the tail: omega_max >= 40 / t, else CutoffTooLow.
double cylinder_trace(const Spectrum& spec, double t);

/// Regularized finite energy at parameter t:
///   sum_n (1/2) mult_n omega_n e^{-omega_n t}  -  L / (2 pi t^2).
double e_finite(const Spectrum& spec, double t, double total_length);

/// Samples of E_finite(t) for Richardson extrapolation to t = 0; `order` is
/// the number of samples used (the extrapolation eliminates the t, t^2, ...,
/// t^{order-1} terms).
struct RegularizedEnergySeries {
  std::vector<std::pair<double, double>> samples;  // (t, E_finite(t))
  int order = 0;                                   // 0 -> samples.size()
};

/// Polynomial (Neville) extrapolation of the sample set to t = 0. The error
/// estimate is the difference between the order-s result and the order-(s-1)
/// result obtained by dropping the largest t. Throws DegenerateNodes when two
/// t values coincide.
EnergyResult richardson_extrapolate(const RegularizedEnergySeries& series);

struct SpectralConfig {
  /// Regularization grid; empty means {0.4, 0.2, 0.1, 0.05} times the
  /// smallest bond length.
  std::vector<double> t_grid;
  int order = 0;  // 0 -> t_grid.size()
  double tol = 1e-10;
  double omega_max_factor = 40.0;  // spectrum cutoff = factor / min(t)
};

std::vector<double> default_t_grid(const Graph& g);

/// The brute-force pipeline: compute_spectrum -> e_finite over the t grid ->
/// richardson_extrapolate. This is the oracle the other methods are checked
/// against.
EnergyResult vacuum_energy_spectral(const Graph& g, const SpectralConfig& cfg);

/// Central-difference force on one bond, -[E_c(L+h) - E_c(L-h)] / 2h.
/// h must be positive and below L_j / 4 (StepTooLarge otherwise);
/// h <= 0 selects the default 1e-3 * L_j.
double force_spectral(const Graph& g, int bond, double step,
                      const SpectralConfig& cfg);

}  // namespace casimir
