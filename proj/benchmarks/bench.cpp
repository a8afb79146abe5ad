#include <benchmark/benchmark.h>

#include "treespan/generators.hpp"
#include "treespan/oracle.hpp"
#include "treespan/recognizer.hpp"

using namespace treespan;

static void BM_RecognizeFig4(benchmark::State& state) {
    Graph g = generate({"fig4", {}});
    for (auto _ : state) {
        auto out = recognize_sigma3(g);
        benchmark::DoNotOptimize(out.admits);
    }
}
BENCHMARK(BM_RecognizeFig4);

static void BM_RecognizeFig5(benchmark::State& state) {
    Graph g = generate({"fig5", {}});
    for (auto _ : state) {
        auto out = recognize_sigma3(g);
        benchmark::DoNotOptimize(out.admits);
    }
}
BENCHMARK(BM_RecognizeFig5);

static void BM_RecognizeRandom(benchmark::State& state) {
    Graph g = random_2connected(static_cast<int>(state.range(0)), 4, 11);
    for (auto _ : state) {
        auto out = recognize_sigma3(g);
        benchmark::DoNotOptimize(out.admits);
    }
}
BENCHMARK(BM_RecognizeRandom)->Arg(8)->Arg(12)->Arg(16);

static void BM_OraclePetersenExact(benchmark::State& state) {
    Graph g = generate({"petersen", {}});
    for (auto _ : state) {
        auto r = exact_sigma(g);
        benchmark::DoNotOptimize(r.sigma);
    }
}
BENCHMARK(BM_OraclePetersenExact);

static void BM_OracleDecide3(benchmark::State& state) {
    Graph g = random_2connected(static_cast<int>(state.range(0)), 3, 5);
    for (auto _ : state) {
        auto r = decide_sigma_le(g, 3);
        benchmark::DoNotOptimize(r.answer);
    }
}
BENCHMARK(BM_OracleDecide3)->Arg(7)->Arg(9);

static void BM_BasicProcedure(benchmark::State& state) {
    Graph g = random_2connected(static_cast<int>(state.range(0)), 8, 3);
    for (auto _ : state) {
        auto t = basic_procedure(g);
        benchmark::DoNotOptimize(t.has_value());
    }
}
BENCHMARK(BM_BasicProcedure)->Arg(16)->Arg(32);

static void BM_Blocks(benchmark::State& state) {
    Graph g = random_2connected(static_cast<int>(state.range(0)), 10, 17);
    for (auto _ : state) {
        auto b = blocks(g);
        benchmark::DoNotOptimize(b.size());
    }
}
BENCHMARK(BM_Blocks)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
