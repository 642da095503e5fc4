#include "shv/ideal.hpp"
#include "shv/mandelstam.hpp"
#include "shv/poset.hpp"
#include "shv/scattering.hpp"
#include "shv/tropical.hpp"

#include <benchmark/benchmark.h>

using namespace shv;

static void BM_TropMinor(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    Rng rng(11);
    RationalMatrix a(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a(i, j) = rng.uniform(-20, 20);
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (auto _ : state) benchmark::DoNotOptimize(trop_minor(a, idx, idx));
}
BENCHMARK(BM_TropMinor)->Arg(4)->Arg(8)->Arg(12);

static void BM_Bidegree(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(GluedPoset(3, 7, 1).bidegree());
}
BENCHMARK(BM_Bidegree)->Unit(benchmark::kMillisecond);

static void BM_GeneratorSuite(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1)),
              r = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(generator_suite(k, n, r));
}
BENCHMARK(BM_GeneratorSuite)->Args({2, 6, 0})->Args({3, 7, 1})->Unit(benchmark::kMillisecond);

static void BM_Hadamard(benchmark::State& state) {
    auto point = psi_sample(3, 8, 1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hadamard(point));
}
BENCHMARK(BM_Hadamard);

static void BM_SolveK2(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto problem = ScatteringProblem::make(hadamard(psi_sample(2, n, 0, 3)));
    SolveOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(solve(problem, opts));
}
BENCHMARK(BM_SolveK2)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
