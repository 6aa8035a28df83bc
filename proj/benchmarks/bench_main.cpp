#include <benchmark/benchmark.h>

#include "fano3/candidates.hpp"
#include "fano3/classify.hpp"
#include "fano3/geometry.hpp"

namespace {

using namespace fano3;

std::vector<LatticePoint> row_2_18() {
    return {{-1, -1, -2}, {-1, -1, -1}, {-1, 0, -1}, {0, -1, -1}, {0, 1, 0},
            {0, 1, 1},   {1, 0, 0},   {1, 0, 1},   {1, 1, 1}};
}

void BM_ConvexHull9(benchmark::State& state) {
    auto pts = row_2_18();
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts, 2));
}
BENCHMARK(BM_ConvexHull9);

void BM_NormalForm9(benchmark::State& state) {
    auto pts = row_2_18();
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(pts));
}
BENCHMARK(BM_NormalForm9);

void BM_DualVolume9(benchmark::State& state) {
    FanoPolytope p = convex_hull(row_2_18(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(anticanonical_volume(p));
}
BENCHMARK(BM_DualVolume9);

void BM_Candidates(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    SearchConfig cfg;
    cfg.doubling_rounds = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate_candidates(k, cfg));
}
BENCHMARK(BM_Candidates)->Arg(4)->Arg(8);

void BM_ClassifyK5(benchmark::State& state) {
    SearchConfig cfg;
    cfg.doubling_rounds = 0;
    CandidateSet cand = generate_candidates(5, cfg);
    for (auto _ : state) {
        SearchOptions opts;
        benchmark::DoNotOptimize(search(5, cand, opts));
    }
}
BENCHMARK(BM_ClassifyK5);

}  // namespace

BENCHMARK_MAIN();
