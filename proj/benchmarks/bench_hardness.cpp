// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "hardness/geometry.hpp"
#include "hardness/hm_class.hpp"
#include "hardness/hm_reg.hpp"
#include "hardness/ih.hpp"
#include "hardness/scaling.hpp"
#include "hardness/synth.hpp"

using namespace hardness;

namespace {

void BM_DistanceMatrix(benchmark::State& state)
{
    const auto view = scale(gen_gaussians(static_cast<std::size_t>(state.range(0)), 1.0, 2, 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_distances(view));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_Mst(benchmark::State& state)
{
    const auto dm = pairwise_distances(scale(gen_gaussians(static_cast<std::size_t>(state.range(0)), 1.0, 2, 0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_mst(dm));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mst)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_ClassificationProfile(benchmark::State& state)
{
    const auto ds = gen_gaussians(static_cast<std::size_t>(state.range(0)), 1.0, 2, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classification_profile(ds));
    }
}
BENCHMARK(BM_ClassificationProfile)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RegressionProfile(benchmark::State& state)
{
    const auto ds = gen_linear(static_cast<std::size_t>(state.range(0)), 0.5, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regression_profile(ds));
    }
}
BENCHMARK(BM_RegressionProfile)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_InstanceHardness(benchmark::State& state)
{
    const auto ds = gen_gaussians(static_cast<std::size_t>(state.range(0)), 1.0, 2, 0);
    const auto pool = default_pool(TaskKind::classification, 0);
    const auto plan = make_cv_plan(ds, 10, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(instance_hardness(ds, pool, plan));
    }
}
BENCHMARK(BM_InstanceHardness)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
