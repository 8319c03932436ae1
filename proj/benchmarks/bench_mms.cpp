#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mmsfair/dominance.hpp"
#include "mmsfair/fairness.hpp"
#include "mmsfair/mms.hpp"
#include "mmsfair/pairs.hpp"

using namespace mmsfair;

namespace {

Instance random_items(std::size_t m, Value max_value, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Value> items(m);
    for (auto& v : items) v = 1 + rng() % max_value;
    return Instance(items);
}

void BM_MmsSearch(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<std::uint32_t>(state.range(1));
    const Instance inst = random_items(m, 1000, 42);
    const Pair p(d / 2, d);
    for (auto _ : state) benchmark::DoNotOptimize(mms(inst, p).value);
}
BENCHMARK(BM_MmsSearch)->Args({8, 3})->Args({12, 4})->Args({14, 5})->Args({16, 6})->Unit(benchmark::kMicrosecond);

void BM_DominanceGrid(benchmark::State& state) {
    const auto max_d = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for (std::uint32_t d = 1; d <= max_d; ++d)
            for (std::uint32_t l = 0; l <= d; ++l)
                for (std::uint32_t dp = 1; dp <= max_d; ++dp)
                    for (std::uint32_t lp = 0; lp <= dp; ++lp) count += dominates(Pair(l, d), Pair(lp, dp));
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_DominanceGrid)->Arg(16)->Arg(32);

void BM_NonDominatedPairs(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const Rational a(37, 50);
    for (auto _ : state) benchmark::DoNotOptimize(non_dominated_pairs(a, m).pairs.size());
}
BENCHMARK(BM_NonDominatedPairs)->Arg(7)->Arg(20)->Arg(40);

void BM_WeightedMaximin(benchmark::State& state) {
    const Instance inst = random_items(static_cast<std::size_t>(state.range(0)), 100, 7);
    const auto t = parse_entitlements("1/5,3/10,1/2");
    for (auto _ : state) benchmark::DoNotOptimize(weighted_maximin(inst, t).level);
}
BENCHMARK(BM_WeightedMaximin)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
