#include <benchmark/benchmark.h>

#include "digifix/exact.hpp"

using namespace digifix;

static void BM_RealSignNearZero(benchmark::State& state)
{
    // 1393/985 - sqrt(2) is about 3.6e-7
    const Real diff = Real(Rational(1393, 985)) - Real::root(Rational(2), 2);
    for (auto _ : state) benchmark::DoNotOptimize(diff.sign());
}
BENCHMARK(BM_RealSignNearZero);

static void BM_RealCompareMixedRadicals(benchmark::State& state)
{
    const Real a = Real::root(Rational(3), 3) + Real::root(Rational(2), 2);
    const Real b = Real::root(Rational(7), 2);
    for (auto _ : state) benchmark::DoNotOptimize(a < b);
}
BENCHMARK(BM_RealCompareMixedRadicals);

static void BM_RealToString(benchmark::State& state)
{
    const Real x = Real::root(Rational(33), 2) / Real(Rational(2));
    for (auto _ : state) benchmark::DoNotOptimize(x.to_string());
}
BENCHMARK(BM_RealToString);
