#include <benchmark/benchmark.h>

#include "twt/power.hpp"
#include "twt/region.hpp"
#include "twt/secrecy.hpp"

namespace {

const twt::StandardGtwChannel kChannel{5.0, 2.0, 0.5, 1.5, 1.0, 1.0};

void RegionClosure(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto region = twt::gtw_region_closure(kChannel, grid);
        benchmark::DoNotOptimize(region.vertices.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RegionClosure)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void PowerOracle(benchmark::State& state) {
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto alloc = twt::optimal_power_oracle(kChannel, grid);
        benchmark::DoNotOptimize(alloc.objective_value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PowerOracle)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void ExactEquivocation(benchmark::State& state) {
    twt::SchemeConfig config;
    config.n = static_cast<int>(state.range(0));
    config.m_1 = config.m_2 = 2;
    config.mx_1 = config.mx_2 = 4;
    config.seed = 1;
    const auto scheme = twt::build_scheme(config);
    for (auto _ : state) {
        auto report = twt::exact_equivocation(scheme, 0.1);
        benchmark::DoNotOptimize(report.ratio);
    }
}
BENCHMARK(ExactEquivocation)->DenseRange(4, 12, 2);

void DecodeError(benchmark::State& state) {
    twt::SchemeConfig config;
    config.n = static_cast<int>(state.range(0));
    config.m_1 = config.m_2 = 2;
    config.mx_1 = config.mx_2 = 4;
    config.seed = 1;
    const auto scheme = twt::build_scheme(config);
    for (auto _ : state) {
        auto err = twt::decode_error(scheme, 0.05);
        benchmark::DoNotOptimize(err[0]);
    }
}
BENCHMARK(DecodeError)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
