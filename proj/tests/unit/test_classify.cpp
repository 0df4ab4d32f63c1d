#include <gtest/gtest.h>

#include <random>

#include "gauge5/classify.hpp"
#include "gauge5/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gauge5;
using namespace gauge5::classify;
using lie::Family;
using lie::LieGroupSpec;

namespace {

spaces::ManifoldSpec make(arith::Int c, int m, bool spin = true, bool sp = false, bool stc = false) {
    spaces::ManifoldSpec M;
    M.c = c;
    M.m = m;
    M.spin = spin;
    M.stably_parallelizable = sp;
    M.single_top_cell = stc;
    return M;
}

std::vector<LieGroupSpec> table1_groups() {
    return {LieGroupSpec(Family::SU, 2),   LieGroupSpec(Family::SU, 3),   LieGroupSpec(Family::SU, 4),
            LieGroupSpec(Family::SU, 5),   LieGroupSpec(Family::SU, 6),   LieGroupSpec(Family::Sp, 2),
            LieGroupSpec(Family::Sp, 3),   LieGroupSpec(Family::Spin, 5), LieGroupSpec(Family::Spin, 7),
            LieGroupSpec(Family::Spin, 6), LieGroupSpec(Family::Spin, 8), LieGroupSpec(Family::G2),
            LieGroupSpec(Family::F4),      LieGroupSpec(Family::E6),      LieGroupSpec(Family::E7),
            LieGroupSpec(Family::E8)};
}

}  // namespace

TEST(MooreOrder, IntegralAndPerPrime) {
    EXPECT_EQ(moore_order(LieGroupSpec(Family::SU, 3), 12), 24);
    EXPECT_EQ(moore_order(LieGroupSpec(Family::SU, 4), 25), 60);
    EXPECT_EQ(moore_order(LieGroupSpec(Family::G2), 21), 21);
    EXPECT_THROW(moore_order(LieGroupSpec(Family::SU, 4), 6), CatalogGap);
    EXPECT_THROW(moore_order(LieGroupSpec(Family::F4), 3), CatalogGap);
}

TEST(ClassifyMoore, Report) {
    auto rep = classify_moore(LieGroupSpec(Family::SU, 3), 12);
    EXPECT_EQ(rep.ord, 24);
    EXPECT_EQ(rep.d, 12);
    EXPECT_EQ(rep.count_integral, 6);
    EXPECT_EQ(rep.classes.size(), 6u);
    EXPECT_EQ(rep.count_at_p.at(2), 3);
    EXPECT_EQ(rep.count_at_p.at(3), 2);
    EXPECT_FALSE(rep.trivial);
    arith::Int total = 0;
    for (const auto& cl : rep.classes) total += cl.size;
    EXPECT_EQ(total, 12);
    EXPECT_TRUE(classify_moore(LieGroupSpec(Family::SU, 3), 7).trivial);
    EXPECT_NE(rep.to_table().find("gcd class"), std::string::npos);
    EXPECT_NE(rep.serialize().find("\"record\""), std::string::npos);
}

TEST(ClassifyMoore, ClassSizesMatchEnumeration) {
    for (arith::Int c = 2; c <= 60; ++c) {
        auto rep = classify_moore(LieGroupSpec(Family::SU, 3), c);
        for (const auto& cl : rep.classes) {
            arith::Int size = 0, rep_k = -1;
            for (arith::Int k = 0; k < c; ++k)
                if (arith::gcd_class(k, rep.d) == cl.gcd) {
                    ++size;
                    if (rep_k < 0) rep_k = k;
                }
            EXPECT_EQ(cl.size, size);
            EXPECT_EQ(cl.representative, rep_k);
        }
    }
}

TEST(ClassifyMoore, ClassCountIsDivisorCount) {
    for (const auto& G : table1_groups())
        for (arith::Int c = 2; c <= 200; ++c) {
            ClassificationReport rep;
            try {
                rep = classify_moore(G, c);
            } catch (const CatalogGap&) {
                continue;
            }
            EXPECT_EQ(rep.d, arith::gcd(rep.ord, c));
            EXPECT_EQ(static_cast<arith::Int>(rep.classes.size()), oracle::brute_divisor_count(rep.d));
            EXPECT_EQ(rep.count_integral, oracle::brute_divisor_count(rep.d));
            for (const auto& [p, n] : rep.count_at_p) EXPECT_EQ(n, arith::nu_p(rep.d, p) + 1);
        }
}

TEST(SameType, EquivalenceRelation) {
    std::mt19937 rng(oracle::kSeed + 9);
    auto G = LieGroupSpec(Family::SU, 3);
    for (int i = 0; i < 2000; ++i) {
        arith::Int c = oracle::uniform(rng, 2, 120);
        arith::Int a = oracle::uniform(rng, -200, 200);
        arith::Int b = oracle::uniform(rng, -200, 200);
        arith::Int d = oracle::uniform(rng, -200, 200);
        EXPECT_TRUE(same_type_moore(a, a, G, c));
        EXPECT_EQ(same_type_moore(a, b, G, c), same_type_moore(b, a, G, c));
        if (same_type_moore(a, b, G, c) && same_type_moore(b, d, G, c)) EXPECT_TRUE(same_type_moore(a, d, G, c));
        EXPECT_TRUE(same_type_moore(a, a + c, G, c));
    }
}

TEST(ClassifyLooped, Hypotheses) {
    auto G = LieGroupSpec(Family::SU, 3);
    EXPECT_THROW(classify_looped_manifold(make(6, 2), G, 2, Localization::integral()), HypothesisError);
    EXPECT_THROW(classify_looped_manifold(make(5, 2), G, 3, Localization::integral()), HypothesisError);
    EXPECT_THROW(classify_looped_manifold(make(5, 2), LieGroupSpec(Family::SU, 2), 2, Localization::integral()),
                 HypothesisError);
    EXPECT_THROW(classify_looped_manifold(make(5, 2), G, 4, Localization::integral()), std::invalid_argument);
    auto rep = classify_looped_manifold(make(9, 2, true, true, true), G, 3, Localization::integral());
    EXPECT_EQ(rep.d, 3);
    EXPECT_EQ(rep.count_integral, 2);
}

TEST(TrivialCase, Listed) {
    EXPECT_TRUE(trivial_case(LieGroupSpec(Family::SU, 3), 3, 3));
    EXPECT_TRUE(trivial_case(LieGroupSpec(Family::SU, 3), 3, 9));
    EXPECT_FALSE(trivial_case(LieGroupSpec(Family::SU, 3), 3, 4));
    EXPECT_FALSE(trivial_case(LieGroupSpec(Family::SU, 3), 2, 3));
    EXPECT_TRUE(trivial_case(LieGroupSpec(Family::G2), 5, 20));
    EXPECT_FALSE(trivial_case(LieGroupSpec(Family::G2), 5, 21));
    EXPECT_FALSE(trivial_case(LieGroupSpec(Family::F4), 3, 2));
}

TEST(Dirichlet, OracleMinimumIsGcd) {
    for (arith::Int c = 2; c <= 40; ++c)
        for (arith::Int k = 0; k < c; ++k) {
            auto gcds = dirichlet_oracle(k, 24, c, 500, 3);
            ASSERT_FALSE(gcds.empty());
            arith::Int expected = arith::gcd(k, arith::gcd(24, c));
            EXPECT_EQ(*gcds.begin(), expected);
            EXPECT_EQ(dirichlet_min(k, 24, c, 500), expected);
            for (auto g : gcds) EXPECT_EQ(g % expected, 0);
        }
}

TEST(Dirichlet, ThreadCountDoesNotChangeResult) {
    for (unsigned w : {1u, 2u, 5u}) EXPECT_EQ(dirichlet_oracle(3, 120, 45, 2000, w), dirichlet_oracle(3, 120, 45, 2000, 1));
}
