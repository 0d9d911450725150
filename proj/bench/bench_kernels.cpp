// Serial reference kernels against their OpenMP counterparts.
// Run with OMP_NUM_THREADS set to compare scaling.

#include <cavity/planewave.hpp>
#include <cavity/radial_oracle.hpp>
#include <cavity/spectra.hpp>

#include <benchmark/benchmark.h>

#include <array>

namespace {

using namespace cavity;

void BM_Eigenvalues_Serial(benchmark::State& state) {
    const auto op = build_operator(1, RadialGrid{0.0, 1.0, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues_serial(op, 8));
}
BENCHMARK(BM_Eigenvalues_Serial)->Arg(2000)->Arg(8000);

void BM_Eigenvalues_Parallel(benchmark::State& state) {
    const auto op = build_operator(1, RadialGrid{0.0, 1.0, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues(op, 8));
}
BENCHMARK(BM_Eigenvalues_Parallel)->Arg(2000)->Arg(8000);

void BM_PlaneWaveGrid_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(max_identity_error_serial(10.0, 41, 40));
}
BENCHMARK(BM_PlaneWaveGrid_Serial);

void BM_PlaneWaveGrid_Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(max_identity_error(10.0, 41, 40));
}
BENCHMARK(BM_PlaneWaveGrid_Parallel);

void BM_Spectrum_Serial(benchmark::State& state) {
    const CavitySpec spec{1.0, 0.05, Convention::CavityI};
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_serial(spec, 6, 6));
}
BENCHMARK(BM_Spectrum_Serial);

void BM_Spectrum_Parallel(benchmark::State& state) {
    const CavitySpec spec{1.0, 0.05, Convention::CavityI};
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(spec, 6, 6));
}
BENCHMARK(BM_Spectrum_Parallel);

constexpr std::array<double, 3> kEps = {1e-2, 1e-3, 1e-4};

void BM_EpsSweep_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eps_convergence_sweep_serial(1, 3, 1.0, kEps));
}
BENCHMARK(BM_EpsSweep_Serial);

void BM_EpsSweep_Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eps_convergence_sweep(1, 3, 1.0, kEps));
}
BENCHMARK(BM_EpsSweep_Parallel);

}  // namespace

BENCHMARK_MAIN();
