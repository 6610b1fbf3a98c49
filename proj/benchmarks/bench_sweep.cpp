#include <benchmark/benchmark.h>

#include "digifix/audit.hpp"
#include "digifix/sweep.hpp"

using namespace digifix;

static void BM_SweepContraction(benchmark::State& state)
{
    SweepSpec spec;
    spec.image = segment_image(static_cast<int>(state.range(0)));
    spec.metric = MetricSpec::lp(1u);
    spec.premise = "contraction";
    spec.conclusion = "constant";
    for (auto _ : state) benchmark::DoNotOptimize(sweep(spec).premise_held);
}
BENCHMARK(BM_SweepContraction)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SweepTheta(benchmark::State& state)
{
    SweepSpec spec;
    spec.image = square_image(2);
    spec.metric = MetricSpec::lp(2u);
    spec.premise = "theta";
    spec.conclusion = "constant";
    spec.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(spec).premise_held);
}
BENCHMARK(BM_SweepTheta)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
