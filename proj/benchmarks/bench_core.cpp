#include <benchmark/benchmark.h>

#include "casimir/closed_form.hpp"
#include "casimir/energy.hpp"
#include "casimir/orbits.hpp"
#include "casimir/spectrum.hpp"

namespace {

using namespace casimir;

Graph fig3_graph() {
  return build_star(4, {1.1, 1.6176, 1.2985, 1.1159},
                    std::vector<BoundaryKind>(4, BoundaryKind::Neumann));
}

void BM_ComputeSpectrum(benchmark::State& state) {
  Graph g = fig3_graph();
  double omega_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    Spectrum s = compute_spectrum(g, omega_max, 1e-10);
    benchmark::DoNotOptimize(s.modes.data());
  }
}
BENCHMARK(BM_ComputeSpectrum)->Arg(50)->Arg(200);

void BM_OrbitEnumeration(benchmark::State& state) {
  Graph g = fig3_graph();
  OrbitSumConfig cfg;
  cfg.l_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto records = primitive_orbit_records(g, cfg);
    benchmark::DoNotOptimize(records.data());
    state.counters["orbits"] = static_cast<double>(records.size());
  }
}
BENCHMARK(BM_OrbitEnumeration)->Arg(12)->Arg(20)->Arg(28);

void BM_OrbitEnergy(benchmark::State& state) {
  Graph g = fig3_graph();
  OrbitSumConfig cfg;
  cfg.l_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    EnergyResult e = vacuum_energy_orbits(g, cfg);
    benchmark::DoNotOptimize(e.value);
  }
}
BENCHMARK(BM_OrbitEnergy)->Arg(16)->Arg(24);

void BM_TransferEnergyExact(benchmark::State& state) {
  Graph g = build_star(static_cast<int>(state.range(0)),
                       std::vector<double>(state.range(0), 1.0),
                       std::vector<BoundaryKind>(state.range(0), BoundaryKind::Neumann));
  for (auto _ : state) {
    EnergyResult e = equal_length_trace_energy_exact(g);
    benchmark::DoNotOptimize(e.value);
  }
}
BENCHMARK(BM_TransferEnergyExact)->Arg(8)->Arg(30);

void BM_Dilog(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-9;
    benchmark::DoNotOptimize(dilog(-0.5 + x));
    benchmark::DoNotOptimize(dilog(0.9 - x));
  }
}
BENCHMARK(BM_Dilog);

}  // namespace

BENCHMARK_MAIN();
