#ifndef CYCLO_TERNARY_HEIGHT_HPP
#define CYCLO_TERNARY_HEIGHT_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "binary_cyclotomic.hpp"
#include "chi_map.hpp"
#include "coefficient_vector.hpp"
#include "ntheory.hpp"

namespace cyclo {

inline constexpr i64 default_size_limit = i64{1} << 20;

/// Validated odd primes p < q < r with the residues and inverses used by
/// the coefficient formula and the bounds.
struct TripleParams {
    i64 p = 0, q = 0, r = 0;
    i64 pq = 0;
    i64 phi_pq = 0;
    i64 phi_pqr = 0;
    i64 r_bar = 0;   // r mod pq
    i64 q_bar_p = 0; // q mod p
    i64 r_bar_p = 0; // r mod p
    i64 q_p_star = 0;
    i64 r_p_star = 0;
    i64 p_q_star = 0;
    BinarySupport support;

    i64 n() const { return checked_mul(pq, r); }
};

inline TripleParams make_triple(i64 p, i64 q, i64 r)
{
    const auto desc = "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(r) + ")";
    if (!(p < q && q < r))
        throw InvalidArgument("expected p < q < r, got " + desc);
    if (!is_odd_prime(p) || !is_odd_prime(q) || !is_odd_prime(r))
        throw InvalidArgument("expected odd primes, got " + desc);

    TripleParams t;
    t.p = p;
    t.q = q;
    t.r = r;
    t.pq = checked_mul(p, q);
    t.phi_pq = (p - 1) * (q - 1);
    t.phi_pqr = checked_mul(t.phi_pq, r - 1);
    checked_mul(t.pq, r);
    t.r_bar = r % t.pq;
    t.q_bar_p = q % p;
    t.r_bar_p = r % p;
    t.q_p_star = mod_inverse(q, p);
    t.r_p_star = mod_inverse(r, p);
    t.p_q_star = mod_inverse(p, q);
    t.support = binary_params(p, q);
    return t;
}

/// Coefficient c_i of Phi_pqr as the sum of d_m chi_{mr}(i) over the m with
/// m r + p + q >= i + 1 + pq. Zero for i outside [0, phi(pqr)].
inline i64 ternary_coeff(const TripleParams& t, i64 i)
{
    if (i < 0 || i > t.phi_pqr)
        return 0;
    const ChiContext ctx{t.p, t.q, t.pq};
    const __int128 threshold = static_cast<__int128>(i) + 1 + t.pq - t.p - t.q;
    const i64 i1 = (i % t.pq + 1) % t.pq;
    i64 c = 0;
    for (i64 m = 0; m <= t.phi_pq; ++m) {
        const int d = lam_leung_coeff(t.support, m);
        if (d == 0 || static_cast<__int128>(m) * t.r < threshold)
            continue;
        c += d * chi_reduced(ctx, mul_mod(m, t.r_bar, t.pq), i1);
    }
    return c;
}

inline CoefficientVector ternary_vector(const TripleParams& t, i64 size_limit = default_size_limit)
{
    if (t.phi_pqr + 1 > size_limit)
        throw TooLarge("Phi_" + std::to_string(t.n()) + " has " + std::to_string(t.phi_pqr + 1)
                       + " coefficients, above the limit of " + std::to_string(size_limit)
                       + "; query single coefficients instead");
    std::vector<i64> c(static_cast<std::size_t>(t.phi_pqr) + 1);
    for (i64 i = 0; i <= t.phi_pqr; ++i)
        c[static_cast<std::size_t>(i)] = ternary_coeff(t, i);
    return CoefficientVector(std::move(c));
}

namespace detail {

inline constexpr i64 max_kernel_modulus = i64{1} << 28;

/// max over i in [0, modulus) and j in [1, phi] of |sum_{m >= j} d_m chi_{m mult}(i)|.
///
/// One backward pass over the nonzero d_m keeps a running suffix sum per i.
/// chi_{m mult} vanishes outside two runs of p residues, so each m touches
/// only those 2p accumulators; every other suffix sum is unchanged from m + 1.
inline i64 suffix_sum_scan(const BinarySupport& s, const ChiContext& ctx, i64 mult)
{
    if (ctx.pq > max_kernel_modulus)
        throw TooLarge("height kernel modulus " + std::to_string(ctx.pq) + " too large");
    const i64 mult_bar = residue_bar(mult, ctx.pq);
    std::vector<i64> acc(static_cast<std::size_t>(ctx.pq), 0);
    i64 best = 0;
    auto touch = [&](i64 n_bar, i64 start, int d) {
        i64 i = start;
        for (i64 k = 0; k < ctx.p; ++k) {
            const i64 i1 = i + 1 == ctx.pq ? 0 : i + 1;
            if (const int x = chi_reduced(ctx, n_bar, i1)) {
                auto& a = acc[static_cast<std::size_t>(i)];
                a += d * x;
                best = std::max(best, a < 0 ? -a : a);
            }
            i = i1;
        }
    };
    for (i64 m = s.phi(); m >= 1; --m) {
        const int d = lam_leung_coeff(s, m);
        if (d == 0)
            continue;
        const i64 n_bar = mul_mod(m, mult_bar, ctx.pq);
        const ChiSupport sup = chi_support(ctx, n_bar);
        touch(n_bar, sup.plus_start, d);
        touch(n_bar, sup.minus_start, d);
    }
    return best;
}

} // namespace detail

/// A(pqr) from the suffix sums of the chi-weighted Phi_pq coefficients.
/// Cost O(p * phi(pq)) plus O(pq) memory, independent of r.
inline i64 height_fast(const TripleParams& t)
{
    return detail::suffix_sum_scan(t.support, ChiContext{t.p, t.q, t.pq}, t.r);
}

/// The same suffix-sum maximum, optionally with q and r exchanged (support of
/// Phi_pr, chi windows over (p, r), multiplier q). Unswapped it equals
/// A(pqr); swapped it is only guaranteed to be an upper bound.
inline i64 partial_sum_upper(const TripleParams& t, bool swap_qr)
{
    if (!swap_qr)
        return height_fast(t);
    const BinarySupport s = binary_params(t.p, t.r);
    return detail::suffix_sum_scan(s, ChiContext{t.p, t.r, s.pq()}, t.q);
}

} // namespace cyclo

#endif
