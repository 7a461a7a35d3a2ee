#include <vector>

#include <benchmark/benchmark.h>

#include "unbordered/experiment.hpp"
#include "unbordered/muf.hpp"

namespace {

using namespace unbordered;

constexpr std::uint64_t kSeed = 0xbe9c;
constexpr int kSampleSize = 64;

std::vector<Word> sample_words(int n, std::uint32_t sigma) {
    std::vector<Word> words;
    words.reserve(kSampleSize);
    for (int t = 0; t < kSampleSize; ++t) {
        words.push_back(random_word(n, sigma, trial_seed(kSeed, sigma, n, t)));
    }
    return words;
}

void BM_MufBasic(benchmark::State& state) {
    const auto words = sample_words(static_cast<int>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(muf_basic(words[i++ % words.size()]));
    }
}

void BM_MufEarlyStop(benchmark::State& state) {
    const auto words = sample_words(static_cast<int>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(muf_early_stop(words[i++ % words.size()]));
    }
}

void BM_MufDispatch(benchmark::State& state) {
    const auto words = sample_words(static_cast<int>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(muf(words[i++ % words.size()]));
    }
}

// Worst case for the early-stopping scan: period and factor length stay
// proportional to n, so many suffixes must be examined.
void BM_MufEarlyStopCounterexample(benchmark::State& state) {
    const Word w = assous_pouzet(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(muf_early_stop(w));
    }
}

}  // namespace

BENCHMARK(BM_MufBasic)->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_MufEarlyStop)->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_MufDispatch)->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_MufEarlyStopCounterexample)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
