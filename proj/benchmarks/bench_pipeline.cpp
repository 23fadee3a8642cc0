#include <benchmark/benchmark.h>

#include "dielrec/medium.hpp"
#include "dielrec/model.hpp"
#include "dielrec/observables.hpp"
#include "dielrec/spectral.hpp"

namespace {

using namespace dielrec;

ModelParams reference_params() {
    const ModelParams base = ModelParams::make(100.0, 1e-6, 1e-9, 0.0);
    const double density = density_from_n_alpha(0.02, base);
    return ModelParams::make(100.0, 1e-6, 1e-9, density);
}

void BM_self_consistent_pole(benchmark::State& state) {
    const ModelParams params = reference_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(self_consistent_pole(1.0, params));
    }
}
BENCHMARK(BM_self_consistent_pole);

void BM_line_normalization(benchmark::State& state) {
    const ModelParams params = reference_params();
    const MediumResponse response = self_consistent_pole(1.0, params);
    const SpectralDensity line = photon_density(params, response);
    const QuadratureSpec quad;
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_photon_probability(line, quad));
    }
}
BENCHMARK(BM_line_normalization);

void BM_recoil_pipeline(benchmark::State& state) {
    const ModelParams params = reference_params();
    const QuadratureSpec quad;
    for (auto _ : state) {
        const MediumResponse response = self_consistent_pole(1.0, params);
        const SpectralDensity line = photon_density(params, response);
        benchmark::DoNotOptimize(recoil_stats(line, params, quad));
    }
}
BENCHMARK(BM_recoil_pipeline);

void BM_energy_ledger(benchmark::State& state) {
    const ModelParams params = reference_params();
    const MediumResponse response = self_consistent_pole(1.0, params);
    const SpectralDensity line = photon_density(params, response);
    const QuadratureSpec quad;
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_ledger(params, response, line, quad));
    }
}
BENCHMARK(BM_energy_ledger);

void BM_spectrum_grid(benchmark::State& state) {
    const ModelParams params = reference_params();
    const MediumResponse response = self_consistent_pole(1.0, params);
    const SpectralDensity line = photon_density(params, response);
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < 2001; ++i) {
            const double t = static_cast<double>(i) / 2000.0;
            acc += line.rho(line.center() + line.width() * (20.0 * t - 10.0));
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_spectrum_grid);

} // namespace

BENCHMARK_MAIN();
