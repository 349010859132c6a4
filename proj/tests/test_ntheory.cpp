#include <gtest/gtest.h>

#include <limits>
#include <random>

#include <cyclo/ntheory.hpp>

#include "oracles.hpp"

using namespace cyclo;

TEST(ResidueBar, Examples)
{
    EXPECT_EQ(residue_bar(-1, 15), 14);
    EXPECT_EQ(residue_bar(31, 15), 1);
    EXPECT_EQ(residue_bar(7, 105), 7);
    EXPECT_EQ(residue_bar(-30, 15), 0);
    EXPECT_EQ(residue_bar(123, 1), 0);
}

TEST(ResidueBar, RejectsNonPositiveModulus)
{
    EXPECT_THROW(residue_bar(5, 0), InvalidArgument);
    EXPECT_THROW(residue_bar(5, -3), InvalidArgument);
}

TEST(ResidueBar, IdempotentAndCongruent)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> n_dist(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<i64> m_dist(1, 100'000);
    for (int k = 0; k < 5000; ++k) {
        const i64 n = n_dist(rng), m = m_dist(rng);
        const i64 r = residue_bar(n, m);
        ASSERT_GE(r, 0);
        ASSERT_LT(r, m);
        ASSERT_EQ((n - r) % m, 0);
        ASSERT_EQ(residue_bar(r, m), r);
    }
}

TEST(ModInverse, Examples)
{
    EXPECT_EQ(mod_inverse(5, 3), 2);
    EXPECT_EQ(mod_inverse(3, 5), 2);
    EXPECT_EQ(mod_inverse(17, 7), oracle::inverse_by_scan(17, 7));
    EXPECT_EQ(mod_inverse(17, 7), 5);
    EXPECT_EQ(mod_inverse(-2, 7), 3);
}

TEST(ModInverse, Errors)
{
    EXPECT_THROW(mod_inverse(6, 9), NotInvertible);
    EXPECT_THROW(mod_inverse(0, 7), NotInvertible);
    EXPECT_THROW(mod_inverse(3, 1), InvalidArgument);
}

TEST(ModInverse, MatchesScanAndIsInvolution)
{
    for (i64 m = 2; m <= 120; ++m) {
        for (i64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1)
                continue;
            const i64 inv = mod_inverse(a, m);
            ASSERT_EQ(inv, oracle::inverse_by_scan(a, m)) << a << " mod " << m;
            ASSERT_EQ(mod_inverse(inv, m), residue_bar(a, m));
        }
    }
}

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1393)); // 7 * 199
}

TEST(IsPrime, AgreesWithTrialDivision)
{
    for (i64 n = 0; n < 200'000; ++n)
        ASSERT_EQ(is_prime(static_cast<u64>(n)), oracle::is_prime(n)) << n;
}

TEST(IsPrime, HardCases)
{
    EXPECT_FALSE(is_prime(561));                    // Carmichael
    EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(3825123056546413051ULL)); // strong pseudoprime to bases up to 23
    EXPECT_FALSE(is_prime(4294967297ULL));          // 641 * 6700417
    EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_TRUE(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    EXPECT_FALSE(is_prime(std::numeric_limits<u64>::max()));
    EXPECT_FALSE(is_prime(4294967291ULL * 4294967279ULL)); // product of two 32-bit primes
}

TEST(SmallestPrimeInClass, Examples)
{
    EXPECT_EQ(smallest_prime_in_class(1, 15, 5, 1'000'000), 31);
    EXPECT_EQ(smallest_prime_in_class(2, 15, 5, 1'000'000), 17);
    EXPECT_THROW(smallest_prime_in_class(3, 15, 5, 1'000'000), NoPrimesInClass);
}

TEST(SmallestPrimeInClass, BudgetIsDistinctFromNonexistence)
{
    EXPECT_THROW(smallest_prime_in_class(1, 15, 5, 30), BudgetExhausted);
    EXPECT_EQ(smallest_prime_in_class(1, 15, 5, 31), 31);
    EXPECT_THROW(smallest_prime_in_class(1, 15, 10, 10), InvalidArgument);
}

TEST(SmallestPrimeInClass, RescanFindsNothingSmaller)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> m_dist(2, 500);
    std::uniform_int_distribution<i64> lo_dist(-10, 2000);
    for (int k = 0; k < 500; ++k) {
        const i64 m = m_dist(rng), lower = lo_dist(rng);
        const i64 rho = std::uniform_int_distribution<i64>(0, m - 1)(rng);
        if (std::gcd(rho, m) != 1)
            continue;
        const i64 s = smallest_prime_in_class(rho, m, lower, 10'000'000);
        ASSERT_TRUE(oracle::is_prime(s));
        ASSERT_GT(s, lower);
        ASSERT_EQ(residue_bar(s - rho, m), 0);
        for (i64 c = lower + 1; c < s; ++c)
            ASSERT_FALSE(residue_bar(c - rho, m) == 0 && oracle::is_prime(c)) << c;
    }
}

TEST(CheckedArithmetic, OverflowThrows)
{
    const i64 big = std::numeric_limits<i64>::max();
    EXPECT_THROW(checked_add(big, 1), OverflowError);
    EXPECT_THROW(checked_sub(-big, 2), OverflowError);
    EXPECT_THROW(checked_mul(big / 2, 3), OverflowError);
    EXPECT_EQ(checked_mul(1'000'000'007, 1'000'000'009), 1'000'000'016'000'000'063);
}

TEST(Factorization, DivisorsAndTotient)
{
    EXPECT_EQ(distinct_prime_factors(210), (std::vector<i64>{2, 3, 5, 7}));
    EXPECT_EQ(divisors(12), (std::vector<i64>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(euler_phi(105), 48);
    EXPECT_EQ(euler_phi(1), 1);
}
