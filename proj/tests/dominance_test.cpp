#include <gtest/gtest.h>

#include <random>

#include "mmsfair/dominance.hpp"
#include "mmsfair/mms.hpp"
#include "oracles.hpp"

using namespace mmsfair;
using mmsfair::testing::all_pairs;
using mmsfair::testing::random_instance;

TEST(Decompose, Examples) {
    EXPECT_EQ(decompose(3, 7), (Decomposition{3, 2}));
    EXPECT_EQ(decompose(5, 3), (Decomposition{1, 2}));
    EXPECT_EQ(decompose(4, 4), (Decomposition{1, 0}));
}

TEST(Decompose, InvariantsHold) {
    for (std::uint64_t d = 1; d <= 40; ++d) {
        for (std::uint64_t dp = 1; dp <= 40; ++dp) {
            const auto [q, r] = decompose(d, dp);
            ASSERT_GE(q, 1u);
            ASSERT_LT(r, d);
            ASSERT_EQ(q * d - r, dp);
        }
    }
}

TEST(Dominates, Examples) {
    EXPECT_TRUE(dominates(Pair(2, 3), Pair(4, 7)));
    EXPECT_FALSE(dominates(Pair(2, 3), Pair(5, 7)));
    EXPECT_FALSE(dominates(Pair(2, 5), Pair(1, 3)));
    EXPECT_FALSE(dominates(Pair(1, 3), Pair(2, 5)));
    // l >= l' and d <= d' is always dominance
    EXPECT_TRUE(dominates(Pair(5, 6), Pair(5, 7)));
    EXPECT_TRUE(dominates(Pair(5, 7), Pair(4, 7)));
}

TEST(Dominates, ReflexiveAndDominatesZero) {
    for (Pair p : all_pairs(30)) {
        EXPECT_TRUE(dominates(p, p)) << p.to_string();
        for (std::uint32_t d = 1; d <= 30; ++d) EXPECT_TRUE(dominates(p, Pair(0, d)));
    }
}

TEST(Dominates, MutualOnlyAmongEmptyOrWholeUnions) {
    EXPECT_TRUE(dominates(Pair(0, 1), Pair(0, 2)));
    EXPECT_TRUE(dominates(Pair(0, 2), Pair(0, 1)));
    EXPECT_TRUE(dominates(Pair(2, 2), Pair(3, 3)));
    EXPECT_TRUE(dominates(Pair(3, 3), Pair(2, 2)));
    const auto pairs = all_pairs(12);
    for (Pair p : pairs)
        for (Pair pp : pairs)
            if (p != pp && dominates(p, pp) && dominates(pp, p))
                EXPECT_TRUE((p.l() == 0 && pp.l() == 0) || (p.l() == p.d() && pp.l() == pp.d()))
                    << p.to_string() << " " << pp.to_string();
}

TEST(Dominates, TransitiveOnGrid) {
    const auto pairs = all_pairs(12);
    for (Pair a : pairs)
        for (Pair b : pairs) {
            if (!dominates(a, b)) continue;
            for (Pair c : pairs)
                if (dominates(b, c)) ASSERT_TRUE(dominates(a, c)) << a.to_string() << b.to_string() << c.to_string();
        }
}

TEST(CorollaryCase, Examples) {
    EXPECT_EQ(corollary_case(Pair(2, 3), Pair(1, 3)), CorollaryCase::a);
    EXPECT_EQ(corollary_case(Pair(2, 3), Pair(2, 4)), CorollaryCase::b);
    EXPECT_EQ(corollary_case(Pair(1, 2), Pair(2, 4)), CorollaryCase::d);
    EXPECT_EQ(corollary_case(Pair(5, 7), Pair(3, 5)), CorollaryCase::c);
    EXPECT_EQ(corollary_case(Pair(2, 3), Pair(5, 7)), std::nullopt);
    EXPECT_EQ(corollary_case(Pair(2, 4), Pair(4, 8)), std::nullopt);  // 2/4 is not reduced
    EXPECT_EQ(label(CorollaryCase::c), 'c');
}

TEST(CorollaryCase, ImpliesDominance) {
    const auto pairs = all_pairs(12, 1);
    for (Pair p : pairs)
        for (Pair pp : pairs)
            if (corollary_case(p, pp)) ASSERT_TRUE(dominates(p, pp)) << p.to_string() << " " << pp.to_string();
}

TEST(NonDominanceWitness, Examples) {
    const Instance w = non_dominance_witness(Pair(2, 3), Pair(5, 7));
    EXPECT_EQ(w, Instance::units(7));
    EXPECT_EQ(mms(w, Pair(2, 3)).value, 4u);
    EXPECT_EQ(mms(w, Pair(5, 7)).value, 5u);

    const Instance w2 = non_dominance_witness(Pair(1, 3), Pair(2, 5));
    EXPECT_EQ(w2, Instance::units(5));
    EXPECT_EQ(mms(w2, Pair(1, 3)).value, 1u);
    EXPECT_EQ(mms(w2, Pair(2, 5)).value, 2u);

    const Instance w3 = non_dominance_witness(Pair(0, 1), Pair(1, 1));
    EXPECT_EQ(w3, Instance::units(1));
    EXPECT_EQ(mms(w3, Pair(0, 1)).value, 0u);
    EXPECT_EQ(mms(w3, Pair(1, 1)).value, 1u);

    EXPECT_THROW(non_dominance_witness(Pair(2, 3), Pair(4, 7)), std::invalid_argument);
}

TEST(Dominates, CompleteOnWitnesses) {
    const auto pairs = all_pairs(8);
    for (Pair p : pairs)
        for (Pair pp : pairs) {
            if (dominates(p, pp)) continue;
            const Instance w = non_dominance_witness(p, pp);
            const Value a = mms(w, p).value, b = mms(w, pp).value;
            ASSERT_LT(a, b) << p.to_string() << " vs " << pp.to_string();
            ASSERT_EQ(a, guaranteed_count(p, pp.d()));
            ASSERT_EQ(b, pp.l());
        }
}

TEST(Dominates, SoundOnRandomInstances) {
    std::mt19937_64 rng(17);
    const auto pairs = all_pairs(5);
    for (int iter = 0; iter < 250; ++iter) {
        const Instance inst = random_instance(rng, 6, 9);
        std::vector<Value> values;
        for (Pair p : pairs) values.push_back(mms(inst, p).value);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (dominates(pairs[i], pairs[j])) ASSERT_GE(values[i], values[j]);
    }
}

TEST(BundleSizeReduction, Examples) {
    EXPECT_TRUE(bundle_size_reduction_applies(Pair(1, 3), Pair(2, 4), 3));
    EXPECT_FALSE(bundle_size_reduction_applies(Pair(1, 3), Pair(2, 4), 4));
    EXPECT_TRUE(bundle_size_reduction_applies(Pair(2, 5), Pair(2, 5), 5));
    EXPECT_FALSE(bundle_size_reduction_applies(Pair(1, 3), Pair(3, 4), 3));
    EXPECT_FALSE(bundle_size_reduction_applies(Pair(2, 3), Pair(1, 2), 2));
}

TEST(BundleSizeReduction, HoldsWhenPredicateApplies) {
    std::mt19937_64 rng(23);
    const auto pairs = all_pairs(7, 1);
    for (int iter = 0; iter < 200; ++iter) {
        const Instance inst = random_instance(rng, 6, 25);
        for (Pair p : pairs)
            for (Pair pp : pairs)
                if (bundle_size_reduction_applies(p, pp, inst.size()))
                    ASSERT_GE(mms(inst, p).value, mms(inst, pp).value);
    }
}
