#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casimir/energy.hpp"
#include "casimir/graph.hpp"

namespace casimir {

/// A primitive periodic orbit: a directed-bond cycle that is not a repetition
/// of a shorter cycle, stored as its lexicographically smallest rotation.
struct PrimitiveOrbit {
  std::vector<int> sequence;   // canonical directed-bond cycle
  double length = 0.0;         // L_p, sum of traversed bond lengths
  double amplitude = 0.0;      // A_p, product of scattering factors
  std::vector<int> traversals;  // per bond, both directions combined
};

/// Repetition handling in the orbit sum: `truncated` keeps r L_p <= L_max
/// (the convention of the convergence figures); `unbounded` resums all
/// repetitions of each kept primitive through the dilogarithm.
enum class RepetitionMode { truncated, unbounded };

struct OrbitSumConfig {
  double l_max = 0.0;
  double amplitude_floor = 0.0;  // keep orbits with |A_p| > floor
  RepetitionMode repetitions = RepetitionMode::truncated;
  std::uint64_t node_budget = 100000000;  // DFS step guard
};

/// Exactly one representative per cyclic-rotation class of primitive directed
/// cycles with L_p <= l_max and |A_p| > amplitude_floor. Time-reversed
/// partners are distinct classes unless rotation-equivalent. Zero-amplitude
/// transitions are pruned during the search. Throws BudgetExceeded when the
/// DFS exceeds cfg.node_budget steps.
std::vector<PrimitiveOrbit> enumerate_primitive_orbits(const Graph& g,
                                                       const OrbitSumConfig& cfg);

/// Product of global scattering entries along a directed-bond cycle,
/// including the wraparound step. Throws DisconnectedStep when consecutive
/// bonds do not share head/tail.
double orbit_amplitude(const Graph& g, const std::vector<int>& sequence);

/// Orbit expansion of the vacuum energy,
///   E_c = -(1/2pi) sum_p sum_r (A_p)^r / (L_p r^2),
/// truncated or dilog-resummed per cfg.repetitions. Contributions accumulate
/// in deterministic order (ascending L_p, then canonical sequence); the error
/// estimate is the magnitude of the last length shell's total contribution.
EnergyResult vacuum_energy_orbits(const Graph& g, const OrbitSumConfig& cfg);

/// Term-by-term derivative -dE_c/dL_j of the orbit expansion:
///   F_j = -(1/2pi) sum_p sum_r (A_p)^r m_{p,j} / (r^2 L_p^2).
double force_orbits(const Graph& g, int bond, const OrbitSumConfig& cfg);

/// Bulk form of the enumeration for summation passes: one (L_p, A_p) record
/// per primitive class, sorted ascending by length (ties keep the canonical
/// lexicographic emission order).
std::vector<std::pair<double, double>> primitive_orbit_records(
    const Graph& g, const OrbitSumConfig& cfg);

/// Shortest-orbit (single-bond bounce) approximation for a piston star,
/// evaluated in closed form through the dilogarithm:
///   E = -(1/4pi) sum_j Li2(x_j) / a_j,  x_j = +-(2/B - 1) by piston kind.
double shortest_orbit_energy(const Graph& g);

/// -d/da_j of shortest_orbit_energy.
double shortest_orbit_force(const Graph& g, int bond);

/// Fast path for graphs whose bonds all share one length L0: the orbit sum
/// regroups into powers of the directed-bond step matrix M = S,
///   E_c = -(1/(2 pi L0)) sum_{N=1}^{N_max} Tr(M^N) / N^2.
/// Throws UnequalLengths when lengths differ.
EnergyResult equal_length_trace_energy(const Graph& g, int n_max);

/// The N_max -> infinity limit of the trace sum, evaluated exactly from the
/// eigenphases of M via Re Li2(e^{i theta}).
EnergyResult equal_length_trace_energy_exact(const Graph& g);

/// CSV with header sequence,L_p,A_p,m_<bond>... ; directed bonds are written
/// as <bond>+ / <bond>- tokens separated by spaces.
std::string orbits_to_csv(const Graph& g,
                          const std::vector<PrimitiveOrbit>& orbits);

}  // namespace casimir
