#include <gtest/gtest.h>

#include <random>

#include "gauge5/errors.hpp"
#include "gauge5/spaces.hpp"
#include "support/generators.hpp"

using namespace gauge5;
using namespace gauge5::spaces;

namespace {

ManifoldSpec make(arith::Int c, int m, bool spin = true, bool sp = false, bool stc = false) {
    ManifoldSpec M;
    M.c = c;
    M.m = m;
    M.spin = spin;
    M.stably_parallelizable = sp;
    M.single_top_cell = stc;
    return M;
}

}  // namespace

TEST(Manifold, ConfigRoundTrip) {
    auto M = ManifoldSpec::parse_config("# lens-like\nc = 5\nm = 3\nspin = no\nstably_parallelizable = yes\n");
    EXPECT_EQ(M.c, 5);
    EXPECT_EQ(M.m, 3);
    EXPECT_FALSE(M.spin);
    EXPECT_TRUE(M.stably_parallelizable);
    EXPECT_FALSE(M.single_top_cell);
    EXPECT_EQ(ManifoldSpec::parse_config(M.serialize()), M);
    EXPECT_THROW(ManifoldSpec::parse_config("c = 5\n"), std::invalid_argument);
    EXPECT_THROW(ManifoldSpec::parse_config("c = 1\nm = 1\n"), std::invalid_argument);
    EXPECT_THROW(ManifoldSpec::parse_config("c = 5\nm = 1\ncolour = red\n"), std::invalid_argument);
    EXPECT_THROW(ManifoldSpec::parse_config("c = 5\nm = 1\nspin = maybe\n"), std::invalid_argument);
}

TEST(Manifold, HomologyValues) {
    auto H = homology(make(5, 3));
    EXPECT_EQ(H[0], FGAbelianGroup::free(1));
    EXPECT_EQ(H[1], FGAbelianGroup::cyclic(5));
    EXPECT_EQ(H[2], FGAbelianGroup::free(2));
    EXPECT_EQ(H[3], FGAbelianGroup::free(2) + FGAbelianGroup::cyclic(5));
    EXPECT_TRUE(H[4].is_trivial());
    EXPECT_EQ(H[5], FGAbelianGroup::free(1));
}

TEST(Manifold, PoincareDualityAndEulerCharacteristic) {
    for (arith::Int c = 2; c <= 100; ++c)
        for (int m = 1; m <= 10; ++m) {
            auto H = homology(make(c, m, m % 2 == 0));
            int chi = 0;
            for (int i = 0; i <= 5; ++i) {
                EXPECT_EQ(H[i].free_rank(), H[5 - i].free_rank());
                if (i <= 4) EXPECT_EQ(H[i].torsion(), H[4 - i].torsion());
                chi += (i % 2 ? -1 : 1) * H[i].free_rank();
            }
            EXPECT_EQ(chi, 0);
        }
}

TEST(Manifold, BundleClasses) {
    EXPECT_EQ(bundle_classes(make(7, 2), lie::LieGroupSpec::parse("SU:3"), Localization::integral()),
              FGAbelianGroup::cyclic(7));
    EXPECT_THROW(bundle_classes(make(7, 2), lie::LieGroupSpec::parse("SU:2"), Localization::integral()),
                 HypothesisError);
    EXPECT_EQ(bundle_classes(make(7, 2), lie::LieGroupSpec::parse("Sp:2"), Localization::away_from({2})),
              FGAbelianGroup::cyclic(7));
}

TEST(Moore, HomotopyGroups) {
    for (arith::Int c : {3, 5, 9, 15, 21, 25, 27, 35}) {
        auto expected = FGAbelianGroup::cyclic(c) + FGAbelianGroup::cyclic(arith::gcd(3, c));
        EXPECT_EQ(pi6_P4(c), expected);
        EXPECT_EQ(pi7_P5(c), expected);
        EXPECT_EQ(suspension_image_order(c), arith::gcd(3, c));
        EXPECT_EQ(pi_moore_self(3, c), FGAbelianGroup::cyclic(c));
        EXPECT_TRUE(pi_moore_self(4, c).is_trivial());
    }
    EXPECT_THROW(pi6_P4(4), HypothesisError);
    EXPECT_THROW(pi_moore_self(2, 5), std::invalid_argument);
}

TEST(Moore, CoefficientTargets) {
    EXPECT_EQ(parse_coefficient_target("S3@4"), CoefficientTarget::S3At4);
    EXPECT_EQ(parse_coefficient_target("P4@5"), CoefficientTarget::P4At5);
    EXPECT_THROW(parse_coefficient_target("S9@9"), std::invalid_argument);
    for (arith::Int c : {3, 5, 15})
        for (auto t : {CoefficientTarget::S3At4, CoefficientTarget::S4At5, CoefficientTarget::P3At4,
                       CoefficientTarget::P4At5}) {
            auto g = pi_with_coefficients(t, c);
            EXPECT_EQ(g.free_rank(), 0);
            EXPECT_EQ(c % g.torsion_order(), 0);
        }
    EXPECT_THROW(pi_with_coefficients(CoefficientTarget::S3At4, 6), HypothesisError);
}

TEST(Splitting, HypothesesNamed) {
    try {
        suspension_splitting(make(6, 2), 3);
        FAIL();
    } catch (const HypothesisError& e) {
        EXPECT_STREQ(e.what(), "hypothesis 6∤c fails");
    }
    EXPECT_THROW(suspension_splitting(make(5, 1), 3), HypothesisError);
    EXPECT_THROW(suspension_splitting(make(5, 2, true, true, false), 4), HypothesisError);
    EXPECT_THROW(suspension_splitting(make(5, 2, true, false, true), 4), HypothesisError);
    EXPECT_THROW(suspension_splitting(make(4, 2), 2), HypothesisError);
    EXPECT_THROW(suspension_splitting(make(5, 2), 5), std::invalid_argument);
    EXPECT_EQ(suspension_splitting(make(5, 2), 3).normalized().to_string(), "P⁵(5)∨P⁷(5)∨ΣZ′");
    EXPECT_EQ(suspension_splitting(make(5, 2), 2).normalized().to_string(), "S⁴∨S⁵∨P⁴(5)∨P⁶(5)");
}

TEST(Splitting, HomologyIsShiftedHomologyOfM) {
    std::mt19937 rng(oracle::kSeed + 3);
    for (int trial = 0; trial < 300; ++trial) {
        auto M = oracle::random_manifold(rng);
        auto H = homology(M);
        for (int t : {2, 3, 4}) {
            WedgeExpr w;
            try {
                w = suspension_splitting(M, t);
            } catch (const HypothesisError&) {
                continue;
            }
            int top = t == 2 ? 4 : 5;
            for (int d = 1; d <= top; ++d) EXPECT_EQ(w.reduced_homology(d + t), H[d]) << M.serialize() << " t=" << t;
            EXPECT_TRUE(w.reduced_homology(t).is_trivial());
        }
    }
}
