#include <gtest/gtest.h>

#include <random>

#include <cyclo/binary_cyclotomic.hpp>
#include <cyclo/chi_map.hpp>

#include "oracles.hpp"

using namespace cyclo;

namespace {

std::vector<std::pair<i64, i64>> prime_pairs(i64 hi)
{
    const auto primes = oracle::primes_in(3, hi);
    std::vector<std::pair<i64, i64>> out;
    for (std::size_t a = 0; a < primes.size(); ++a)
        for (std::size_t b = a + 1; b < primes.size(); ++b)
            out.emplace_back(primes[a], primes[b]);
    return out;
}

} // namespace

TEST(Chi, Examples)
{
    const auto c = make_chi_context(3, 5);
    EXPECT_EQ(chi(c, 0, 7), 1);
    EXPECT_EQ(chi(c, 0, 0), -1);
    EXPECT_EQ(chi(c, 0, 10), 0);
    EXPECT_EQ(chi_reference(c, 0, 7), 1);
    EXPECT_EQ(chi_reference(c, 0, 0), -1);
    EXPECT_EQ(chi_reference(c, 0, 10), 0);
}

TEST(Chi, ContextValidation)
{
    EXPECT_THROW(make_chi_context(5, 3), InvalidArgument);
    EXPECT_THROW(make_chi_context(3, 15), InvalidArgument);
}

TEST(Chi, DefinitionsAgreeExhaustively)
{
    for (auto [p, q] : prime_pairs(13)) {
        const auto c = make_chi_context(p, q);
        for (i64 n = 0; n < c.pq; ++n)
            for (i64 i = 0; i < c.pq; ++i)
                ASSERT_EQ(chi(c, n, i), chi_reference(c, n, i)) << p << ' ' << q << ' ' << n << ' ' << i;
    }
}

TEST(Chi, ReferenceIsPeriodicForLargeArguments)
{
    const auto c = make_chi_context(3, 5);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<i64> dist(-5000, 5000);
    for (int k = 0; k < 2000; ++k) {
        const i64 n = dist(rng), i = dist(rng);
        ASSERT_EQ(chi_reference(c, n + 15, i), chi_reference(c, n, i));
        ASSERT_EQ(chi_reference(c, n, i), chi(c, n, i));
    }
}

TEST(Chi, Periodicity)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<i64> dist(-1'000'000'000'000, 1'000'000'000'000);
    for (auto [p, q] : prime_pairs(41)) {
        const auto c = make_chi_context(p, q);
        for (int k = 0; k < 50; ++k) {
            const i64 n = dist(rng), i = dist(rng);
            const int v = chi(c, n, i);
            ASSERT_EQ(chi(c, n + c.pq, i), v);
            ASSERT_EQ(chi(c, n, i + c.pq), v);
            ASSERT_EQ(chi(c, n - 7 * c.pq, i + 3 * c.pq), v);
        }
    }
}

TEST(Chi, Reflection)
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<i64> dist(-100'000, 100'000);
    for (auto [p, q] : prime_pairs(31)) {
        const auto c = make_chi_context(p, q);
        for (i64 r : {q + 2, 101L, 1009L, 7919L}) {
            for (int k = 0; k < 40; ++k) {
                const i64 m = dist(rng), i = dist(rng);
                ASSERT_EQ(chi(c, m * r, i), -chi(c, -m * r, -i + p + q - 1));
            }
        }
    }
}

TEST(Chi, ShiftByInverseOfR)
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<i64> dist(-100'000, 100'000);
    for (auto [p, q] : prime_pairs(31)) {
        const auto c = make_chi_context(p, q);
        for (i64 r : oracle::primes_in(q + 1, q + 60)) {
            const i64 r_p_star = mod_inverse(r % p, p);
            for (int k = 0; k < 20; ++k) {
                const i64 m = dist(rng), i = dist(rng);
                ASSERT_EQ(chi(c, m * r, i) == -1, chi(c, (m - r_p_star * q) * r, i) == 1)
                    << p << ' ' << q << ' ' << r << ' ' << m << ' ' << i;
            }
        }
    }
}

TEST(Chi, AtMostOnePerRectangleColumn)
{
    for (auto [p, q] : prime_pairs(23)) {
        const auto s = binary_params(p, q);
        const auto c = make_chi_context(p, q);
        for (i64 r : oracle::primes_in(q + 1, q + 40)) {
            for (i64 i = 0; i < c.pq; ++i) {
                for (i64 v = 0; v < s.q_p_star; ++v) {
                    int plus = 0, minus = 0;
                    for (i64 u = 0; u < s.p_q_star; ++u) {
                        const int x = chi(c, s.positive_exponent(u, v) * r, i);
                        plus += x == 1;
                        minus += x == -1;
                    }
                    ASSERT_LE(plus, 1);
                    ASSERT_LE(minus, 1);
                }
                for (i64 v = s.q_p_star; v < s.p; ++v) {
                    int plus = 0, minus = 0;
                    for (i64 u = s.p_q_star; u < s.q; ++u) {
                        const int x = chi(c, s.negative_exponent(u, v) * r, i);
                        plus += x == 1;
                        minus += x == -1;
                    }
                    ASSERT_LE(plus, 1);
                    ASSERT_LE(minus, 1);
                }
            }
        }
    }
}

TEST(Chi, SupportRunsCoverAllNonzeroValues)
{
    for (auto [p, q] : prime_pairs(17)) {
        const auto c = make_chi_context(p, q);
        for (i64 n = 0; n < c.pq; ++n) {
            const auto sup = chi_support(c, n);
            std::vector<int> expected(static_cast<std::size_t>(c.pq), 0);
            for (i64 k = 0; k < p; ++k) {
                expected[static_cast<std::size_t>((sup.plus_start + k) % c.pq)] = 1;
                expected[static_cast<std::size_t>((sup.minus_start + k) % c.pq)] = -1;
            }
            for (i64 i = 0; i < c.pq; ++i)
                ASSERT_EQ(chi(c, n, i), expected[static_cast<std::size_t>(i)]);
        }
    }
}
