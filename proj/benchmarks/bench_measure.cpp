#include <benchmark/benchmark.h>

#include "sigma/measure.hpp"
#include "sigma/symbol.hpp"
#include "sigma/tree.hpp"

namespace {

sigma::ColorSet colors_for(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('a' + i));
    return sigma::ColorSet(std::move(names));
}

void BM_EvalClosedForm(benchmark::State& state) {
    auto trees = sigma::enumerate_directed_trees(colors_for(4));
    const auto& tree = trees[trees.size() / 2];
    sigma::Word w(std::vector<int>{0, 1, 2, 3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::eval_closed_form(tree, 0, 3, w));
}
BENCHMARK(BM_EvalClosedForm);

void BM_EvalRecursive(benchmark::State& state) {
    auto trees = sigma::enumerate_directed_trees(colors_for(4));
    auto symbol = sigma::symbol_from_obs(sigma::obs_from_tree(trees[trees.size() / 2]));
    sigma::Word w(std::vector<int>{0, 1, 2, 3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::eval_recursive(symbol, 0, 3, w));
}
BENCHMARK(BM_EvalRecursive);

void BM_VerifyMeasureAxioms(benchmark::State& state) {
    auto trees = sigma::enumerate_directed_trees(colors_for(2));
    auto symbol = sigma::symbol_from_obs(sigma::obs_from_tree(trees.front()));
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::verify_measure_axioms(symbol, depth));
}
BENCHMARK(BM_VerifyMeasureAxioms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_UniversalMeasure(benchmark::State& state) {
    auto colors = colors_for(4);
    sigma::Word w(std::vector<int>{0, 1, 2, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma::universal_measure(colors, 0, 3, w));
}
BENCHMARK(BM_UniversalMeasure)->Unit(benchmark::kMillisecond);

} // namespace
