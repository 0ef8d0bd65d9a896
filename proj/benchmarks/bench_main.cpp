#include <benchmark/benchmark.h>

#include <random>

#include "pumpkit/corpus.hpp"
#include "pumpkit/level_analysis.hpp"
#include "pumpkit/pump_extractor.hpp"
#include "pumpkit/normalizer.hpp"
#include "pumpkit/runner.hpp"

using namespace pumpkit;

namespace {

// A ±1 walk that never drops below zero, fixed seed per length.
std::vector<std::size_t> walk(std::size_t length)
{
    std::mt19937_64 rng(length);
    std::bernoulli_distribution up(0.5);
    std::vector<std::size_t> s{1};
    while (s.size() < length)
        s.push_back(s.back() == 0 || up(rng) ? s.back() + 1 : s.back() - 1);
    return s;
}

void BM_MaxLevel(benchmark::State& state)
{
    const auto s = walk(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_level(s, s.size() - 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxLevel)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

void BM_BruteForceMaxLevel(benchmark::State& state)
{
    const auto s = walk(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_max_level(s, s.size() - 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceMaxLevel)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_MinimalPathDyck(benchmark::State& state)
{
    const auto pda = normalize(builtin("DYCK1").pda);
    const auto w = generate("DYCK1", static_cast<std::size_t>(state.range(0)));
    const auto limits = SearchLimits::defaults(w.size(), saturating_pumping_params(pda).p);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_accepting_path(pda, w, limits));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinimalPathDyck)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ExtractStrictDyck(benchmark::State& state)
{
    const auto pda = normalize(builtin("DYCK1").pda);
    const auto w = generate("DYCK1", 6601);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract(pda, w, ExtractionMode::Strict));
}
BENCHMARK(BM_ExtractStrictDyck)->Unit(benchmark::kMillisecond);

void BM_ExtractBestEffortPalindrome(benchmark::State& state)
{
    const auto pda = normalize(builtin("GEN_PAL").pda);
    const auto w = generate("GEN_PAL", static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract(pda, w, ExtractionMode::BestEffort));
}
BENCHMARK(BM_ExtractBestEffortPalindrome)->Arg(16)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
