#include "nippas/models.hpp"

#include <benchmark/benchmark.h>

using namespace nippas;

static void BM_SteadySolve(benchmark::State& state) {
    SteadyAdvectionDiffusion model(ReProfile::re1, static_cast<int>(state.range(0)),
                                   QoiSpec::select(static_cast<int>(state.range(0)) / 2));
    Vector z = Vector::Constant(1, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(model.sample(z));
}
BENCHMARK(BM_SteadySolve)->Arg(200)->Arg(1000);

static void BM_UnsteadySample(benchmark::State& state) {
    UnsteadyAdvectionDiffusion model(TimeScheme::crank_nicolson, 64,
                                     1.0 / static_cast<double>(state.range(0)));
    Vector z(2);
    z << 2.1, 0.8;
    for (auto _ : state) benchmark::DoNotOptimize(model.sample(z));
}
BENCHMARK(BM_UnsteadySample)->Arg(1000)->Arg(10000);

static void BM_DambreakSample(benchmark::State& state) {
    SweDambreak model(static_cast<int>(state.range(0)), 0.45);
    Vector z(2);
    z << 0.3, 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(model.sample(z));
}
BENCHMARK(BM_DambreakSample)->Arg(200)->Arg(500);
