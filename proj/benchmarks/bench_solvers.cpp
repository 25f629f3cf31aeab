#include <benchmark/benchmark.h>

#include "fsc/generate.hpp"
#include "fsc/matching.hpp"
#include "fsc/path_cover.hpp"
#include "fsc/scheduling.hpp"

namespace {

fsc::Graph agreement_graph(int n, double p, std::uint64_t seed) {
    return fsc::gen_random_gnp(n, p, seed).conflicts;  // shape only; used as host directly
}

void BM_MaximumTwoMatching(benchmark::State& state) {
    fsc::Graph g = agreement_graph(static_cast<int>(state.range(0)), 0.1, 99);
    for (auto _ : state) {
        auto m = fsc::maximum_two_matching(g);
        benchmark::DoNotOptimize(m.edges.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximumTwoMatching)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_ZeroOnePathCover(benchmark::State& state) {
    fsc::Graph g = agreement_graph(static_cast<int>(state.range(0)), 0.1, 99);
    for (auto _ : state) {
        auto cover = fsc::min_zero_one_path_cover(g);
        benchmark::DoNotOptimize(cover.paths.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ZeroOnePathCover)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_SolveUnitEndToEnd(benchmark::State& state) {
    fsc::Instance inst = fsc::gen_random_gnp(static_cast<int>(state.range(0)), 0.9, 7);
    for (auto _ : state) {
        auto s = fsc::solve_unit(inst, fsc::CoverObjective::zero_one_paths);
        benchmark::DoNotOptimize(s.makespan);
    }
}
BENCHMARK(BM_SolveUnitEndToEnd)->RangeMultiplier(2)->Range(32, 256);

void BM_TwoCliqueSchedule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    fsc::Instance inst = fsc::gen_two_cliques(n / 3, n, 100, 5);
    auto part = fsc::recognize_two_cliques(inst.conflicts);
    for (auto _ : state) {
        auto s = fsc::two_clique_schedule(inst, *part);
        benchmark::DoNotOptimize(s.makespan);
    }
}
BENCHMARK(BM_TwoCliqueSchedule)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
