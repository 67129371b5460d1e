#include "casimir/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace casimir {

const char* method_name(Method m) {
  switch (m) {
    case Method::spectral: return "spectral";
    case Method::orbit: return "orbit";
    case Method::analytic: return "analytic";
    case Method::transfer: return "transfer";
  }
  return "?";
}

namespace {

void check_cutoff(const Spectrum& spec, double t) {
  if (!(t > 0.0)) fail(ErrorCode::DomainError, "t must be > 0");
  if (spec.omega_max * t < 40.0 * (1.0 - 1e-12))
    fail(ErrorCode::CutoffTooLow,
         "spectrum cutoff " + std::to_string(spec.omega_max) +
             " is below the 40/t tail bound for t = " + std::to_string(t));
}

}  // namespace

double cylinder_trace(const Spectrum& spec, double t) {
  check_cutoff(spec, t);
  double sum = 0.0;
  // ascending omega: add smallest terms last for a stable tail
  for (auto it = spec.modes.rbegin(); it != spec.modes.rend(); ++it)
    sum += it->multiplicity * std::exp(-it->omega * t);
  return sum;
}

double e_finite(const Spectrum& spec, double t, double total_length) {
  check_cutoff(spec, t);
  double sum = 0.0;
  for (auto it = spec.modes.rbegin(); it != spec.modes.rend(); ++it)
    sum += 0.5 * it->multiplicity * it->omega * std::exp(-it->omega * t);
  return sum - total_length / (2.0 * std::numbers::pi * t * t);
}

EnergyResult richardson_extrapolate(const RegularizedEnergySeries& series) {
  const int s = series.order > 0 ? series.order
                                 : static_cast<int>(series.samples.size());
  if (s < 2 || static_cast<int>(series.samples.size()) < s)
    fail(ErrorCode::DomainError,
         "richardson extrapolation needs at least 2 samples");

  std::vector<std::pair<double, double>> pts(series.samples.begin(),
                                             series.samples.begin() + s);
  // largest t first so dropping the first point gives the order-(s-1) result
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int i = 0; i + 1 < s; ++i)
    if (std::abs(pts[i].first - pts[i + 1].first) <
        1e-15 * std::abs(pts[i].first))
      fail(ErrorCode::DegenerateNodes,
           "coincident t nodes at t = " + std::to_string(pts[i].first));

  // Neville tableau evaluated at t = 0
  auto neville_at_zero = [](const std::vector<std::pair<double, double>>& p) {
    std::vector<double> v;
    v.reserve(p.size());
    for (const auto& q : p) v.push_back(q.second);
    const int n = static_cast<int>(p.size());
    for (int k = 1; k < n; ++k)
      for (int i = 0; i < n - k; ++i) {
        double ti = p[i].first, tik = p[i + k].first;
        v[i] = (tik * v[i] - ti * v[i + 1]) / (tik - ti);
      }
    return v[0];
  };

  double full = neville_at_zero(pts);
  std::vector<std::pair<double, double>> reduced(pts.begin() + 1, pts.end());
  double lower = reduced.size() >= 2 ? neville_at_zero(reduced) : pts.back().second;

  EnergyResult result;
  result.value = full;
  result.error_estimate = std::abs(full - lower);
  result.method = Method::spectral;
  result.parameters["order"] = s;
  result.parameters["t_max"] = pts.front().first;
  result.parameters["t_min"] = pts.back().first;
  return result;
}

std::vector<double> default_t_grid(const Graph& g) {
  double min_len = 0.0;
  for (const Bond& b : g.bonds())
    min_len = (min_len == 0.0) ? b.length : std::min(min_len, b.length);
  return {0.4 * min_len, 0.2 * min_len, 0.1 * min_len, 0.05 * min_len};
}

EnergyResult vacuum_energy_spectral(const Graph& g, const SpectralConfig& cfg) {
  std::vector<double> t_grid = cfg.t_grid.empty() ? default_t_grid(g) : cfg.t_grid;
  double t_min = *std::min_element(t_grid.begin(), t_grid.end());
  if (!(t_min > 0.0)) fail(ErrorCode::DomainError, "t grid must be positive");

  double omega_max = cfg.omega_max_factor / t_min;
  Spectrum spec = compute_spectrum(g, omega_max, cfg.tol);

  RegularizedEnergySeries series;
  series.order = cfg.order > 0 ? cfg.order : static_cast<int>(t_grid.size());
  for (double t : t_grid)
    series.samples.emplace_back(t, e_finite(spec, t, g.total_length()));

  EnergyResult result = richardson_extrapolate(series);
  result.method = Method::spectral;
  result.parameters["tol"] = cfg.tol;
  result.parameters["omega_max"] = omega_max;
  for (size_t i = 0; i < t_grid.size(); ++i)
    result.parameters["t" + std::to_string(i + 1)] = t_grid[i];
  return result;
}

double force_spectral(const Graph& g, int bond, double step,
                      const SpectralConfig& cfg) {
  if (bond < 0 || bond >= g.bond_count())
    fail(ErrorCode::UnknownBond, "bond index out of range");
  double len = g.bonds()[bond].length;
  double h = step > 0.0 ? step : 1e-3 * len;
  if (h >= len / 4.0)
    fail(ErrorCode::StepTooLarge,
         "step " + std::to_string(h) + " too large for bond length " +
             std::to_string(len));
  EnergyResult plus = vacuum_energy_spectral(g.with_bond_length(bond, len + h), cfg);
  EnergyResult minus = vacuum_energy_spectral(g.with_bond_length(bond, len - h), cfg);
  return -(plus.value - minus.value) / (2.0 * h);
}

}  // namespace casimir
