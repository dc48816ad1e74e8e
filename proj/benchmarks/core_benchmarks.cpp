#include "hitchin/flow_solver.hpp"
#include "hitchin/kahler_geometry.hpp"
#include "hitchin/moment_map.hpp"
#include "hitchin/quillen_curvature.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hitchin;

void BM_Curvature(benchmark::State& state) {
  const SurfaceGrid grid(static_cast<int>(state.range(0)), 1.0);
  const Configuration c = random_configuration(grid, static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(c));
  state.SetItemsProcessed(state.iterations() * grid.site_count());
}
BENCHMARK(BM_Curvature)->Args({8, 2})->Args({16, 2})->Args({32, 2})->Args({16, 3});

void BM_EnergyGradient(benchmark::State& state) {
  const SurfaceGrid grid(static_cast<int>(state.range(0)), 1.0);
  const Configuration c = random_configuration(grid, static_cast<int>(state.range(1)), 2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(energy_gradient(c));
  state.SetItemsProcessed(state.iterations() * grid.site_count());
}
BENCHMARK(BM_EnergyGradient)->Args({8, 1})->Args({8, 2})->Args({16, 2});

void BM_MetricG(benchmark::State& state) {
  const SurfaceGrid grid(static_cast<int>(state.range(0)), 1.0);
  const TangentVector x = random_tangent(grid, 2, 3);
  const TangentVector y = random_tangent(grid, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(metric_g(x, y));
}
BENCHMARK(BM_MetricG)->Arg(8)->Arg(16);

void BM_HamiltonianIdentity(benchmark::State& state) {
  const SurfaceGrid grid(8, 1.0);
  const Configuration c = random_configuration(grid, 2, 5);
  const GaugeAlgebraField zeta = random_skew_hermitian(grid, 2, 6, 2);
  const TangentVector y = random_tangent(grid, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_hamiltonian_identity(c, zeta, y));
}
BENCHMARK(BM_HamiltonianIdentity);

void BM_SpectrumInvariance(benchmark::State& state) {
  const SurfaceGrid grid(static_cast<int>(state.range(0)), 1.0);
  const int n = static_cast<int>(state.range(1));
  const ReferenceConnection a0(random_form(grid, FormDegree::ZeroOne, n, 8, 1, 0.5));
  const LatticeForm phi = random_form(grid, FormDegree::OneZero, n, 9, 1, 0.5);
  const GaugeElement g = exponentiate(random_skew_hermitian(grid, n, 10), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_spectrum_invariance(a0, phi, g, 10));
}
BENCHMARK(BM_SpectrumInvariance)->Args({6, 1})->Args({4, 2})->Args({8, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
