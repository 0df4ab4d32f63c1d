#include <gtest/gtest.h>

#include <random>

#include "gauge5/errors.hpp"
#include "gauge5/rational.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gauge5;
using namespace gauge5::rational;

TEST(Hilbert, ParseAndTrim) {
    auto X = HilbertSeries::parse("1,0,2,2,0,1,0,0");
    EXPECT_EQ(X.top_degree(), 5);
    EXPECT_EQ(X[2], 2);
    EXPECT_EQ(X[9], 0);
    EXPECT_EQ(X.serialize(), "1,0,2,2,0,1");
    EXPECT_EQ(HilbertSeries::parse("b=1,0,1"), HilbertSeries::parse("1,0,1"));
    EXPECT_EQ(HilbertSeries::manifold(3), X);
    EXPECT_THROW(HilbertSeries::parse("2,0,1"), std::invalid_argument);
    EXPECT_THROW(HilbertSeries::parse("1,,1"), std::invalid_argument);
    EXPECT_THROW(HilbertSeries::parse("1,-1"), std::invalid_argument);
    EXPECT_THROW(rational_gauge(HilbertSeries::parse("1,1"), RationalGroupModel({3}, {}), false), HypothesisError);
}

TEST(GroupModel, OfLieGroupAndParse) {
    auto G = RationalGroupModel::of(lie::LieGroupSpec::parse("SU:4"));
    EXPECT_EQ(G.exterior, (std::vector<int>{3, 5, 7}));
    EXPECT_TRUE(G.exterior_only());
    EXPECT_EQ(RationalGroupModel::parse(G.serialize()), G);
    EXPECT_EQ(RationalGroupModel::parse("exterior=5,3;polynomial=4"), RationalGroupModel({3, 5}, {4}));
    EXPECT_THROW(RationalGroupModel({4}, {}), std::invalid_argument);
    EXPECT_THROW(RationalGroupModel({3}, {3}), std::invalid_argument);
}

TEST(RationalGauge, Example) {
    auto X = HilbertSeries::manifold(2);
    auto G = RationalGroupModel({3, 5}, {});
    EXPECT_EQ(rational_gauge(X, G, false).to_string(), "G × Ω²G × Ω³G × Ω⁵G");
    EXPECT_EQ(rational_gauge(X, G, true).to_string(), "Ω²G × Ω³G × Ω⁵G");
    EXPECT_EQ(rational_B_star(X, G).to_string(), "ΩG × Ω²G × Ω⁴G");
    EXPECT_THROW(rational_B_star(X, RationalGroupModel({3}, {4})), HypothesisError);
}

TEST(RationalGauge, FelixOpreaOnRandomPairs) {
    std::mt19937 rng(oracle::kSeed + 10);
    for (int trial = 0; trial < 200; ++trial) {
        auto X = oracle::random_series(rng);
        auto G = oracle::random_model(rng);
        auto free = rational_gauge(X, G, false);
        auto based = rational_gauge(X, G, true);
        auto em = em_expansion(X, G, false);
        auto em_based = em_expansion(X, G, true);
        for (int q = 1; q <= 30; ++q) {
            int expected = oracle::felix_oprea(X, G, q);
            int expected_based = oracle::felix_oprea(X, G, q, 1);
            EXPECT_EQ(decomp::rational_rank(free, q), expected);
            EXPECT_EQ(decomp::rational_rank(based, q), expected_based);
            EXPECT_EQ(rational_rank_formula(X, G, q, false), expected);
            EXPECT_EQ(rational_rank_formula(X, G, q, true), expected_based);
            if (q >= 2) {
                EXPECT_EQ(decomp::rational_rank(em, q), expected);
                EXPECT_EQ(decomp::rational_rank(em_based, q), expected_based);
            }
        }
    }
}

TEST(RationalGauge, BStarShiftsDegree) {
    std::mt19937 rng(oracle::kSeed + 11);
    for (int trial = 0; trial < 100; ++trial) {
        auto X = oracle::random_series(rng);
        auto G = oracle::random_model(rng);
        if (!G.exterior_only()) continue;
        auto B = rational_B_star(X, G);
        for (int q = 2; q <= 30; ++q) EXPECT_EQ(decomp::rational_rank(B, q), oracle::felix_oprea(X, G, q - 1, 1));
    }
}

TEST(CohomologyRing, Examples) {
    auto X = HilbertSeries::manifold(2);
    auto G = RationalGroupModel({3}, {});
    auto ring = rational_cohomology_ring(RingTarget::Gauge, X, G);
    EXPECT_EQ(to_string(ring), "Λ(x₁) ⊗ Λ(x₃)");
    EXPECT_EQ(to_string(rational_cohomology_ring(RingTarget::BStar, X, G)), "Λ(x₁) ⊗ Q[y₂]");
    EXPECT_EQ(to_string(GeneratorLedger{}), "Q");
    EXPECT_EQ(parse_ledger(serialize(ring)), ring);
}

TEST(CohomologyRing, GeneratorsMatchHomotopyRanks) {
    std::mt19937 rng(oracle::kSeed + 12);
    for (int trial = 0; trial < 200; ++trial) {
        auto X = oracle::random_series(rng);
        auto G = oracle::random_model(rng);
        auto ring = rational_cohomology_ring(RingTarget::Gauge, X, G);
        EXPECT_EQ(parse_ledger(serialize(ring)), ring);
        for (int q = 1; q <= 30; ++q) {
            int count = 0;
            for (const auto& g : ring) count += g.degree == q;
            EXPECT_EQ(count, oracle::felix_oprea(X, G, q));
            for (const auto& g : ring)
                EXPECT_EQ(g.kind == Generator::Kind::Exterior, g.degree % 2 == 1);
        }
    }
}
