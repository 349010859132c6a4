#ifndef CYCLO_CHI_MAP_HPP
#define CYCLO_CHI_MAP_HPP

#include <cstdlib>
#include <string>

#include "ntheory.hpp"

namespace cyclo {

/// Window indicator chi_n(i) for a prime pair p < q:
///   +1  if some integer s has  n + p + q >= i + 1 + s pq > n + q
///   -1  if some integer s has  n + p     >= i + 1 + s pq > n
///    0  otherwise.
/// The two windows are disjoint residue intervals of length p, so at most
/// one case applies and the value depends only on n and i modulo pq.
struct ChiContext {
    i64 p = 0;
    i64 q = 0;
    i64 pq = 0;
};

inline ChiContext make_chi_context(i64 p, i64 q)
{
    if (!is_odd_prime(p) || !is_odd_prime(q) || p >= q)
        throw InvalidArgument("chi context needs odd primes p < q, got (" + std::to_string(p) + ", "
                              + std::to_string(q) + ")");
    return ChiContext{p, q, checked_mul(p, q)};
}

namespace detail {

// a >= b >= 0, b < pq  =>  (a) mod pq for a < 2pq
inline i64 wrap_once(i64 a, i64 pq) noexcept { return a >= pq ? a - pq : a; }

// Residue comparison for the window (lo, hi] where hi = lo + width mod pq.
inline bool in_window(i64 hi, i64 lo, i64 x) noexcept
{
    return (hi >= x && x > lo) || (x <= hi && hi < lo) || (hi < lo && lo < x);
}

} // namespace detail

/// chi with n and i + 1 already reduced into [0, pq). Hot path of the
/// height kernel.
inline int chi_reduced(const ChiContext& c, i64 n_bar, i64 i1_bar) noexcept
{
    const i64 n_q = detail::wrap_once(n_bar + c.q, c.pq);
    const i64 n_pq = detail::wrap_once(n_q + c.p, c.pq);
    if (detail::in_window(n_pq, n_q, i1_bar))
        return 1;
    const i64 n_p = detail::wrap_once(n_bar + c.p, c.pq);
    if (detail::in_window(n_p, n_bar, i1_bar))
        return -1;
    return 0;
}

/// chi_n(i) via residue comparisons. Arbitrary n, i; constant time.
inline int chi(const ChiContext& c, i64 n, i64 i)
{
    return chi_reduced(c, residue_bar(n, c.pq), residue_bar(checked_add(residue_bar(i, c.pq), 1), c.pq));
}

/// chi_n(i) by enumerating the integers s in the existential definition.
/// Test oracle only.
inline int chi_reference(const ChiContext& c, i64 n, i64 i)
{
    const i64 span = (std::abs(n) + std::abs(i)) / c.pq + 2;
    bool plus = false, minus = false;
    for (i64 s = -span; s <= span; ++s) {
        const i64 t = checked_add(checked_add(i, 1), checked_mul(s, c.pq));
        if (checked_add(n, c.p + c.q) >= t && t > checked_add(n, c.q))
            plus = true;
        if (checked_add(n, c.p) >= t && t > n)
            minus = true;
    }
    if (plus && minus)
        throw InternalError("chi windows overlap");
    return plus ? 1 : (minus ? -1 : 0);
}

/// Start residues of the two length-p runs of i in [0, pq) on which chi_n
/// can be nonzero: i in {start, ..., start + p - 1} (mod pq).
struct ChiSupport {
    i64 plus_start;
    i64 minus_start;
};

inline ChiSupport chi_support(const ChiContext& c, i64 n_bar) noexcept
{
    return ChiSupport{detail::wrap_once(n_bar + c.q, c.pq), n_bar};
}

} // namespace cyclo

#endif
