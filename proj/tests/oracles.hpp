#ifndef CYCLO_TESTS_ORACLES_HPP
#define CYCLO_TESTS_ORACLES_HPP

// Brute-force reference computations for the tests. Nothing here calls into
// the library code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Poly = std::vector<i64>;

inline bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<i64> primes_in(i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 n = lo; n <= hi; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

inline i64 inverse_by_scan(i64 a, i64 m)
{
    for (i64 x = 1; x < m; ++x)
        if (((a % m + m) % m) * x % m == 1)
            return x;
    return 0;
}

inline int mobius(i64 n)
{
    int mu = 1;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return 0;
            mu = -mu;
        }
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

/// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}, multiplying the positive
/// factors first and then dividing out each x^d - 1 by long division.
inline Poly phi_mobius(i64 n)
{
    Poly f{1};
    std::vector<i64> den;
    for (i64 d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        const int mu = mobius(n / d);
        if (mu == 1) {
            Poly g(f.size() + static_cast<std::size_t>(d), 0);
            for (std::size_t k = 0; k < f.size(); ++k) {
                g[k + static_cast<std::size_t>(d)] += f[k];
                g[k] -= f[k];
            }
            f = std::move(g);
        } else if (mu == -1) {
            den.push_back(d);
        }
    }
    for (i64 d : den) {
        // f = (x^d - 1) g  =>  g_k = f_{k+d} + g_{k+d} walking downward.
        const std::size_t ud = static_cast<std::size_t>(d);
        Poly g(f.size() - ud, 0);
        for (std::size_t k = g.size(); k-- > 0;) {
            const i64 above = k + ud < g.size() ? g[k + ud] : 0;
            g[k] = f[k + ud] + above;
        }
        f = std::move(g);
    }
    trim(f);
    return f;
}

inline i64 height(const Poly& f)
{
    i64 h = 0;
    for (i64 c : f)
        h = std::max(h, c < 0 ? -c : c);
    return h;
}

/// Random prime in [lo, hi].
inline i64 random_prime(std::mt19937_64& rng, i64 lo, i64 hi)
{
    std::uniform_int_distribution<i64> dist(lo, hi);
    for (;;) {
        const i64 x = dist(rng);
        if (is_prime(x))
            return x;
    }
}

/// Random odd primes p < q < r with q <= q_hi and r <= r_hi.
struct RandomTriple {
    i64 p, q, r;
};

inline RandomTriple random_triple(std::mt19937_64& rng, i64 q_hi, i64 r_hi)
{
    for (;;) {
        const i64 p = random_prime(rng, 3, q_hi - 1);
        const i64 q = random_prime(rng, 3, q_hi);
        const i64 r = random_prime(rng, 3, r_hi);
        if (p < q && q < r)
            return {p, q, r};
    }
}

} // namespace oracle

#endif
