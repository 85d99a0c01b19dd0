// Serial vs OpenMP-parallel comparison of the batch kernels.
#include <benchmark/benchmark.h>

#include <vector>

#include "thinfilm/kernel.hpp"
#include "thinfilm/profiles.hpp"
#include "thinfilm/similarity.hpp"

using namespace thinfilm;

namespace {

std::vector<double> u_points(int n) {
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = -12.0 + 24.0 * i / (n - 1);
    return u;
}

void bm_phi_grid_serial(benchmark::State& state) {
    const auto spec = KernelSpec::make();
    const auto u = u_points((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_grid_serial(u, spec));
}

void bm_phi_grid_parallel(benchmark::State& state) {
    const auto spec = KernelSpec::make();
    const auto u = u_points((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_grid(u, spec));
}

Field bound_profile() {
    const Grid1D grid(-51.2, 0.05, 2048);
    return ProfileSpec::gaussian(0.1, 0.5).sample(grid);
}

void bm_a_bound_serial(benchmark::State& state) {
    const Field delta0 = bound_profile();
    for (auto _ : state) benchmark::DoNotOptimize(a_bound_serial(delta0, 100.0));
}

void bm_a_bound_parallel(benchmark::State& state) {
    const Field delta0 = bound_profile();
    for (auto _ : state) benchmark::DoNotOptimize(a_bound(delta0, 100.0));
}

} // namespace

BENCHMARK(bm_phi_grid_serial)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_phi_grid_parallel)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_a_bound_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_a_bound_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
