#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mmsfair/mms.hpp"
#include "mmsfair/pairs.hpp"
#include "oracles.hpp"

using namespace mmsfair;
using mmsfair::testing::random_instance;

namespace {

std::vector<Pair> pairs_of(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> xs) {
    std::vector<Pair> out;
    for (auto [l, d] : xs) out.emplace_back(l, d);
    return out;
}

std::vector<Rational> entitlement_samples() {
    std::vector<Rational> out;
    for (std::int64_t den = 1; den <= 12; ++den)
        for (std::int64_t num = 1; num <= den; ++num) out.emplace_back(num, den);
    out.emplace_back(74, 100);
    out.emplace_back(1, 7);
    return out;
}

}  // namespace

TEST(CandidatePairs, Examples) {
    EXPECT_EQ(candidate_pairs(Rational(74, 100), 7),
              pairs_of({{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}}));
    EXPECT_EQ(candidate_pairs(Rational(1), 3), pairs_of({{1, 1}, {2, 2}, {3, 3}}));
    EXPECT_EQ(candidate_pairs(Rational(1, 2), 4), pairs_of({{0, 1}, {1, 2}, {1, 3}, {2, 4}}));
    EXPECT_THROW(candidate_pairs(Rational(1, 2), 0), std::invalid_argument);
    EXPECT_THROW(candidate_pairs(Rational(0), 3), std::invalid_argument);
    EXPECT_THROW(candidate_pairs(Rational(5, 4), 3), std::invalid_argument);
}

TEST(NonDominatedPairs, Examples) {
    EXPECT_EQ(non_dominated_pairs(Rational(74, 100), 7).pairs, pairs_of({{2, 3}, {5, 7}}));
    EXPECT_EQ(non_dominated_pairs(Rational(1, 2), 4).pairs, pairs_of({{1, 2}}));
    EXPECT_EQ(non_dominated_pairs(Rational(1), 3).pairs, pairs_of({{1, 1}}));
    // only l = 0 candidates: the mutual-dominance group keeps the smallest d
    EXPECT_EQ(non_dominated_pairs(Rational(2, 5), 2).pairs, pairs_of({{0, 1}}));
}

TEST(FiltrationTrace, ReproducesWorkedExample) {
    const auto trace = filtration_trace(Rational(74, 100), 7);
    std::vector<std::string> lines;
    for (const auto& r : trace) lines.push_back(r.to_string());
    EXPECT_EQ(lines, (std::vector<std::string>{
                         "0/1 is filtered out by 2/3 (with q=1, r=2)",
                         "1/2 is filtered out by 2/3 (with q=1, r=1)",
                         "2/4 is filtered out by 2/3 (with q=2, r=2)",
                         "3/5 is filtered out by 5/7 (with q=1, r=2)",
                         "4/6 is filtered out by 2/3 (with q=2, r=0)",
                     }));
}

TEST(NonDominatedPairs, InvariantsAcrossEntitlements) {
    for (const Rational& a : entitlement_samples()) {
        for (std::size_t m = 1; m <= 20; ++m) {
            const PairSet set = non_dominated_pairs(a, m);
            const auto cands = candidate_pairs(a, m);
            const auto trace = filtration_trace(a, m);
            ASSERT_FALSE(set.pairs.empty());
            ASSERT_TRUE(std::is_sorted(set.pairs.begin(), set.pairs.end()));
            for (Pair p : set.pairs) {
                ASSERT_EQ(p.l(), rational_floor_mul(a, p.d()));
                ASSERT_LE(p.d(), m);
            }
            for (Pair x : set.pairs)
                for (Pair y : set.pairs)
                    if (x != y) ASSERT_FALSE(dominates(x, y)) << a << " m=" << m << " " << x.to_string() << y.to_string();
            // every candidate survives or is dominated by a survivor
            for (Pair c : cands) {
                const bool covered = std::any_of(set.pairs.begin(), set.pairs.end(), [&](Pair s) { return dominates(s, c); });
                ASSERT_TRUE(covered);
            }
            // replaying the trace on the candidates yields the survivors
            std::vector<Pair> replay = cands;
            for (const auto& r : trace) {
                ASSERT_TRUE(dominates(r.by, r.removed));
                ASSERT_TRUE(std::binary_search(set.pairs.begin(), set.pairs.end(), r.by));
                ASSERT_EQ(r.decomposition, decompose(r.by.d(), r.removed.d()));
                replay.erase(std::find(replay.begin(), replay.end(), r.removed));
            }
            ASSERT_EQ(replay, set.pairs);
            // determinism
            ASSERT_EQ(non_dominated_pairs(a, m).pairs, set.pairs);
        }
    }
}

TEST(NonDominatedPairs, RemovedPairsAreImpliedOnInstances) {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 300; ++iter) {
        const Instance inst = random_instance(rng, 6, 20);
        if (inst.empty()) continue;
        const Rational a(1 + static_cast<std::int64_t>(rng() % 9), 10);
        for (const auto& r : filtration_trace(a, inst.size()))
            ASSERT_GE(mms(inst, r.by).value, mms(inst, r.removed).value);
    }
}
