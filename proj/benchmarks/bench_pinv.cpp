#include "nippas/pinv.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nippas;

namespace {

Eigen::MatrixXd random_square(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    return Eigen::MatrixXd::NullaryExpr(n, n, [&] { return g(rng); });
}

}  // namespace

// one incremental column append at size n, the O(n^2) path
static void BM_GrevilleAppend(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PinvState base = make_pinv_state(random_square(n, 1));
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXd column = Eigen::VectorXd::NullaryExpr(n, [&] { return g(rng); });
    for (auto _ : state) {
        PinvState work = base;
        greville_append_column(work, column);
        benchmark::DoNotOptimize(work.G);
    }
}
BENCHMARK(BM_GrevilleAppend)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

// the O(n^3) alternative the incremental update avoids
static void BM_DirectPinv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Eigen::MatrixXd a = random_square(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(direct_pinv(a));
}
BENCHMARK(BM_DirectPinv)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
