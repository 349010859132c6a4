#ifndef CYCLO_NTHEORY_HPP
#define CYCLO_NTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cyclo {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Overflow-checked arithmetic. Every wrap is an OverflowError.
// ---------------------------------------------------------------------------

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline i64 checked_sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// Residue of n modulo M as a value in [0, M).
struct Residue {
    i64 value;
    i64 modulus;
};

/// Canonical representative of n modulo M, in [0, M). Negative n allowed.
inline i64 residue_bar(i64 n, i64 M)
{
    if (M < 1)
        throw InvalidArgument("invalid modulus " + std::to_string(M));
    i64 r = n % M;
    return r < 0 ? r + M : r;
}

inline Residue make_residue(i64 n, i64 M) { return Residue{residue_bar(n, M), M}; }

inline i64 mul_mod(i64 a, i64 b, i64 M)
{
    auto r = (static_cast<__int128>(residue_bar(a, M)) * residue_bar(b, M)) % M;
    return static_cast<i64>(r);
}

/// Inverse of a modulo m in (0, m). Throws NotInvertible when gcd(a, m) != 1.
inline i64 mod_inverse(i64 a, i64 m)
{
    if (m < 2)
        throw InvalidArgument("mod_inverse: modulus must be >= 2, got " + std::to_string(m));
    i64 r0 = m, r1 = residue_bar(a, m);
    i64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 quot = r0 / r1;
        i64 t = r0 - quot * r1;
        r0 = r1;
        r1 = t;
        t = s0 - quot * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    return residue_bar(s0, m);
}

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod_u64(u64 base, u64 e, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    return r;
}

// Strong probable-prime test to base a; n odd, n > a.
inline bool strong_probable_prime(u64 n, u64 a)
{
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int k = 1; k < s; ++k) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

/// Exact primality for every 64-bit input: trial division by the primes
/// below 40, then Miller-Rabin with the first twelve prime bases, which has
/// no strong pseudoprimes below 3.1e23.
inline bool is_prime(u64 n)
{
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 p : small) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    if (n < 41 * 41)
        return true;
    for (u64 a : small)
        if (!detail::strong_probable_prime(n, a))
            return false;
    return true;
}

inline bool is_odd_prime(i64 n) { return n > 2 && is_prime(static_cast<u64>(n)); }

inline constexpr i64 default_prime_search_cap = 100'000'000;

/// Smallest prime s with lower < s <= cap and s = rho (mod M).
///
/// Dirichlet guarantees such a prime exists once gcd(rho, M) = 1, so the
/// two failure modes are distinct: NoPrimesInClass means the class holds at
/// most one prime (the modulus shares a factor with rho), BudgetExhausted means
/// only that the cap was too small.
inline i64 smallest_prime_in_class(i64 rho, i64 M, i64 lower, i64 cap = default_prime_search_cap)
{
    if (M < 1)
        throw InvalidArgument("invalid modulus " + std::to_string(M));
    if (cap <= lower)
        throw InvalidArgument("prime search cap " + std::to_string(cap) + " must exceed lower bound "
                              + std::to_string(lower));
    if (std::gcd(residue_bar(rho, M), M) != 1)
        throw NoPrimesInClass("residue " + std::to_string(rho) + " shares a factor with modulus "
                              + std::to_string(M));

    i64 s = checked_add(lower, 1);
    s = checked_add(s, residue_bar(checked_sub(rho, s), M));
    for (; s <= cap; s = checked_add(s, M)) {
        if (s >= 2 && is_prime(static_cast<u64>(s)))
            return s;
    }
    throw BudgetExhausted("no prime = " + std::to_string(residue_bar(rho, M)) + " (mod " + std::to_string(M)
                          + ") in (" + std::to_string(lower) + ", " + std::to_string(cap) + "]");
}

/// Distinct prime factors of n in ascending order (trial division).
inline std::vector<i64> distinct_prime_factors(i64 n)
{
    if (n < 1)
        throw InvalidArgument("expected a positive integer, got " + std::to_string(n));
    std::vector<i64> out;
    for (i64 d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

inline i64 euler_phi(i64 n)
{
    i64 result = n;
    for (i64 p : distinct_prime_factors(n))
        result = result / p * (p - 1);
    return result;
}

inline std::vector<i64> divisors(i64 n)
{
    std::vector<i64> lo, hi;
    for (i64 d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d)
                hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

} // namespace cyclo

#endif
