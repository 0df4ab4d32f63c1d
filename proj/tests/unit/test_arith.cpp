#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "gauge5/arith.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gauge5;
using namespace gauge5::arith;

TEST(Arith, CheckedOpsThrowOnOverflow) {
    constexpr Int big = std::numeric_limits<Int>::max();
    EXPECT_THROW(checked_add(big, 1), std::overflow_error);
    EXPECT_THROW(checked_mul(big / 2 + 1, 2), std::overflow_error);
    EXPECT_THROW(checked_pow(10, 19), std::overflow_error);
    EXPECT_EQ(checked_pow(10, 18), 1000000000000000000LL);
    EXPECT_EQ(checked_pow(7, 0), 1);
    EXPECT_EQ(checked_mul(-3, 4), -12);
}

TEST(Arith, Primes) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
    EXPECT_THROW(require_prime(9), std::invalid_argument);
    EXPECT_EQ(primes_between(10, 30), (std::vector<Int>{11, 13, 17, 19, 23, 29}));
    EXPECT_TRUE(primes_between(24, 28).empty());
}

TEST(Arith, FactorizeRoundTrip) {
    for (Int m = 1; m <= 3000; ++m) {
        auto f = factorize(m);
        EXPECT_EQ(f.value(), m);
        for (const auto& pp : f.factors()) {
            EXPECT_TRUE(is_prime(pp.p));
            EXPECT_GT(pp.e, 0);
        }
    }
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(to_string(factorize(360)), "2^3*3^2*5");
    EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Arith, ValuationAndDigitSum) {
    EXPECT_EQ(nu_p(24, 2), 3);
    EXPECT_EQ(nu_p(24, 3), 1);
    EXPECT_EQ(nu_p(24, 5), 0);
    EXPECT_EQ(digit_sum(10, 3), 2);
    EXPECT_EQ(digit_sum(0, 5), 0);
}

TEST(Arith, LegendreMatchesBruteForce) {
    for (Int p : primes_between(2, 31))
        for (Int m = 0; m <= 200; ++m) EXPECT_EQ(legendre_valuation(m, p), oracle::brute_legendre(m, p)) << m << " " << p;
}

TEST(Arith, DivisorCountMatchesEnumeration) {
    for (Int m = 1; m <= 1000; ++m) EXPECT_EQ(divisor_count(m), oracle::brute_divisor_count(m)) << m;
}

TEST(Arith, GcdLcmAgainstOracle) {
    std::mt19937 rng(oracle::kSeed);
    for (int i = 0; i < 500; ++i) {
        Int a = oracle::uniform(rng, -300, 300);
        Int b = oracle::uniform(rng, 1, 300);
        EXPECT_EQ(gcd(a, b), oracle::brute_gcd(a, b));
        EXPECT_EQ(lcm(a, b) * gcd(a, b), (a < 0 ? -a : a) * b);
    }
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_EQ(gcd(0, 12), 12);
}

TEST(Arith, GcdClassShiftInvariant) {
    std::mt19937 rng(oracle::kSeed + 1);
    for (int i = 0; i < 1000; ++i) {
        Int d = oracle::uniform(rng, 1, 500);
        Int k = oracle::uniform(rng, -1000, 1000);
        Int t = oracle::uniform(rng, -20, 20);
        EXPECT_EQ(gcd_class(k, d), gcd_class(k + t * d, d));
        EXPECT_EQ(d % gcd_class(k, d), 0);
    }
    EXPECT_EQ(gcd_class(0, 12), 12);
    EXPECT_EQ(gcd_class(-3, 12), 3);
    EXPECT_EQ(mod_floor(-1, 5), 4);
}
