#include <benchmark/benchmark.h>

#include "sigma/bisection.hpp"
#include "sigma/line.hpp"
#include "sigma/tree.hpp"

namespace {

sigma::ColorSet colors_for(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('a' + i));
    return sigma::ColorSet(std::move(names));
}

void BM_EnumerateTrees(benchmark::State& state) {
    auto colors = colors_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::enumerate_directed_trees(colors));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateObs(benchmark::State& state) {
    auto colors = colors_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::enumerate_obs(colors));
}
BENCHMARK(BM_EnumerateObs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateExtended(benchmark::State& state) {
    auto colors = colors_for(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::enumerate_extended(colors));
}
BENCHMARK(BM_EnumerateExtended)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
