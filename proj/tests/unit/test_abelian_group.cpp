#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gauge5/abelian_group.hpp"
#include "gauge5/localization.hpp"
#include "support/generators.hpp"

using namespace gauge5;

TEST(AbelianGroup, CyclicDecomposesIntoPrimaryParts) {
    auto g = FGAbelianGroup::cyclic(12);
    EXPECT_EQ(g.free_rank(), 0);
    EXPECT_EQ(g.torsion(), (std::vector<arith::PrimePower>{{2, 2}, {3, 1}}));
    EXPECT_EQ(g.torsion_order(), 12);
    EXPECT_EQ(g.invariant_factors(), (std::vector<arith::Int>{12}));
    EXPECT_TRUE(FGAbelianGroup::cyclic(1).is_trivial());
    EXPECT_EQ(FGAbelianGroup::cyclic(0), FGAbelianGroup::free(1));
}

TEST(AbelianGroup, InvariantFactors) {
    auto g = FGAbelianGroup::from_cyclics({2, 4, 6, 9});
    EXPECT_EQ(g.invariant_factors(), (std::vector<arith::Int>{2, 6, 36}));
    EXPECT_EQ(g.torsion_order(), 2 * 4 * 6 * 9);
}

TEST(AbelianGroup, ToStringAndParse) {
    auto g = FGAbelianGroup::free(2) + FGAbelianGroup::cyclic(3) + FGAbelianGroup::cyclic(2).times(4);
    EXPECT_EQ(g.to_string(), "Z^2 ⊕ (Z/2)^4 ⊕ Z/3");
    EXPECT_EQ(FGAbelianGroup::parse(g.to_string()), g);
    EXPECT_EQ(FGAbelianGroup::parse("Z + Z/5 + Z/3"), FGAbelianGroup::free(1) + FGAbelianGroup::cyclic(15));
    EXPECT_EQ(FGAbelianGroup().to_string(), "0");
    EXPECT_EQ(FGAbelianGroup::parse("0"), FGAbelianGroup());
    EXPECT_THROW(FGAbelianGroup::parse("Z/"), std::invalid_argument);
    EXPECT_THROW(FGAbelianGroup::parse("free=1;torsion=4^1"), std::invalid_argument);
}

TEST(AbelianGroup, CanonicalizationIdempotent) {
    std::mt19937 rng(oracle::kSeed);
    for (int i = 0; i < 500; ++i) {
        auto g = oracle::random_group(rng);
        EXPECT_EQ(FGAbelianGroup(g.free_rank(), g.torsion()), g);
        EXPECT_EQ(FGAbelianGroup::parse(g.serialize()), g);
        EXPECT_EQ(FGAbelianGroup::parse(g.to_string()), g);
        auto shuffled = g.torsion();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(FGAbelianGroup(g.free_rank(), shuffled), g);
    }
}

TEST(AbelianGroup, SumIsCommutativeAndAssociative) {
    std::mt19937 rng(oracle::kSeed + 2);
    for (int i = 0; i < 300; ++i) {
        auto a = oracle::random_group(rng);
        auto b = oracle::random_group(rng);
        auto c = oracle::random_group(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + FGAbelianGroup(), a);
        EXPECT_EQ(a.times(3), a + a + a);
    }
}

TEST(AbelianGroup, Localization) {
    auto g = FGAbelianGroup::free(1) + FGAbelianGroup::from_cyclics({2, 3, 5});
    EXPECT_EQ(g.localized(Localization::away_from({6})), FGAbelianGroup::free(1) + FGAbelianGroup::cyclic(5));
    EXPECT_EQ(g.localized(Localization::at_prime(3)), FGAbelianGroup::free(1) + FGAbelianGroup::cyclic(3));
    EXPECT_EQ(g.localized(Localization::rational()), FGAbelianGroup::free(1));
    EXPECT_EQ(g.localized(Localization::integral()), g);
}

TEST(LocalizationCtx, ParseSerialize) {
    for (auto ctx : {Localization::integral(), Localization::rational(), Localization::at_prime(7),
                     Localization::away_from({10, 3})})
        EXPECT_EQ(Localization::parse(ctx.serialize()), ctx);
    auto away = Localization::away_from({10});
    EXPECT_TRUE(away.inverts(2));
    EXPECT_TRUE(away.inverts(5));
    EXPECT_FALSE(away.inverts(3));
    EXPECT_TRUE(away.inverts_all_primes_of(20));
    EXPECT_EQ(away.to_string(), "away from {2,5}");
    EXPECT_EQ(Localization::away_from({1}), Localization::integral());
    EXPECT_TRUE(Localization::at_prime(3).inverts(5));
    EXPECT_FALSE(Localization::at_prime(3).inverts(3));
    EXPECT_THROW(Localization::at_prime(4), std::invalid_argument);
    EXPECT_THROW(Localization::parse("at:"), std::invalid_argument);
}
