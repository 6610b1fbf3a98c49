#include <benchmark/benchmark.h>

#include "digifix/audit.hpp"
#include "digifix/metrics.hpp"

using namespace digifix;

static void BM_DistanceTableLp(benchmark::State& state)
{
    const auto img = rectangle_image(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        DistanceTable table(img, MetricSpec::lp(2u));
        benchmark::DoNotOptimize(table.distance(0, img->size() - 1));
    }
}
BENCHMARK(BM_DistanceTableLp)->Arg(4)->Arg(8)->Arg(12);

static void BM_DistanceTableShortestPath(benchmark::State& state)
{
    const auto img = rectangle_image(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        DistanceTable table(img, MetricSpec::shortest_path());
        benchmark::DoNotOptimize(table.distance(0, img->size() - 1));
    }
}
BENCHMARK(BM_DistanceTableShortestPath)->Arg(4)->Arg(8)->Arg(12);
