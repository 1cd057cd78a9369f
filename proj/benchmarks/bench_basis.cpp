#include "nippas/basis.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nippas;

// evaluation cost of an n-term graded-lex combination (the inner loop of
// every swarm objective call)
static void BM_EvalCombination(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BasisSpec spec(BoundingBox::unit(2));
    for (int i = 0; i < n; ++i) spec.indices.push_back(next_index(spec));

    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0.0, 1.0);
    Vector coeffs = Vector::NullaryExpr(n, [&] { return g(rng); });
    Vector z(2);
    z << 0.37, 0.61;

    for (auto _ : state) benchmark::DoNotOptimize(eval_combination(spec, coeffs, z));
}
BENCHMARK(BM_EvalCombination)->Arg(10)->Arg(40)->Arg(100)->Arg(400);

static void BM_BasisRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BasisSpec spec(BoundingBox::unit(2));
    for (int i = 0; i < n; ++i) spec.indices.push_back(next_index(spec));
    Vector z(2);
    z << 0.37, 0.61;
    for (auto _ : state) benchmark::DoNotOptimize(basis_row(spec, z));
}
BENCHMARK(BM_BasisRow)->Arg(40)->Arg(400);
