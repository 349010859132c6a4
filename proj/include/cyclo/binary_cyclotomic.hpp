#ifndef CYCLO_BINARY_CYCLOTOMIC_HPP
#define CYCLO_BINARY_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "coefficient_vector.hpp"
#include "ntheory.hpp"

namespace cyclo {

/// Closed-form support of Phi_pq for odd primes p < q (Lam-Leung).
///
/// With p_q_star = p^{-1} mod q and q_p_star = q^{-1} mod p, the coefficient
/// of x^m is
///   +1  iff m = u p + v q,        u in [0, p_q_star),  v in [0, q_p_star)
///   -1  iff m + pq = u' p + v' q, u' in [p_q_star, q), v' in [q_p_star, p)
///    0  otherwise.
/// Only the four parameters are stored; membership is solved per query.
struct BinarySupport {
    i64 p = 0;
    i64 q = 0;
    i64 p_q_star = 0;
    i64 q_p_star = 0;

    i64 pq() const noexcept { return p * q; }
    i64 phi() const noexcept { return (p - 1) * (q - 1); }

    i64 positive_count() const noexcept { return p_q_star * q_p_star; }
    i64 negative_count() const noexcept { return (q - p_q_star) * (p - q_p_star); }

    /// Exponent of the positive-rectangle cell (u, v).
    i64 positive_exponent(i64 u, i64 v) const noexcept { return u * p + v * q; }
    /// Exponent of the negative-rectangle cell (u', v').
    i64 negative_exponent(i64 u, i64 v) const noexcept { return u * p + v * q - p * q; }
};

inline BinarySupport binary_params(i64 p, i64 q)
{
    if (!is_odd_prime(p) || !is_odd_prime(q))
        throw InvalidArgument("binary_params: expected odd primes, got (" + std::to_string(p) + ", "
                              + std::to_string(q) + ")");
    if (p >= q)
        throw InvalidArgument("binary_params: expected p < q, got (" + std::to_string(p) + ", "
                              + std::to_string(q) + ")");
    checked_mul(p, q);
    return BinarySupport{p, q, mod_inverse(p, q), mod_inverse(q, p)};
}

/// Coefficient of x^m in Phi_pq; zero outside [0, phi(pq)].
inline int lam_leung_coeff(const BinarySupport& s, i64 m) noexcept
{
    if (m < 0 || m > s.phi())
        return 0;
    // Both rectangles share v = m q^{-1} (mod p).
    const i64 v = (m % s.p) * s.q_p_star % s.p;
    if (v < s.q_p_star) {
        const i64 rest = m - v * s.q;
        if (rest >= 0 && rest / s.p < s.p_q_star)
            return 1;
        return 0;
    }
    const i64 rest = m + s.p * s.q - v * s.q;
    const i64 u = rest / s.p;
    if (rest >= 0 && u >= s.p_q_star && u < s.q)
        return -1;
    return 0;
}

struct SupportTerm {
    i64 exponent;
    int coeff;
};

/// Nonzero terms of Phi_pq in increasing exponent order.
inline std::vector<SupportTerm> support_terms(const BinarySupport& s)
{
    std::vector<SupportTerm> out;
    out.reserve(static_cast<std::size_t>(s.positive_count() + s.negative_count()));
    for (i64 m = 0; m <= s.phi(); ++m)
        if (int d = lam_leung_coeff(s, m))
            out.push_back({m, d});
    return out;
}

inline CoefficientVector binary_vector(const BinarySupport& s)
{
    std::vector<i64> c(static_cast<std::size_t>(s.phi()) + 1, 0);
    for (i64 m = 0; m <= s.phi(); ++m)
        c[static_cast<std::size_t>(m)] = lam_leung_coeff(s, m);
    return CoefficientVector(std::move(c));
}

} // namespace cyclo

#endif
