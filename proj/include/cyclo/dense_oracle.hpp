#ifndef CYCLO_DENSE_ORACLE_HPP
#define CYCLO_DENSE_ORACLE_HPP

#include <map>
#include <string>

#include "coefficient_vector.hpp"
#include "ntheory.hpp"
#include "ternary_height.hpp"

namespace cyclo {

// Ground truth by exact polynomial division. Slow and obviously correct;
// everything faster is checked against it.

namespace detail {

inline CoefficientVector phi_dense_rec(i64 n, std::map<i64, CoefficientVector>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;

    CoefficientVector result;
    if (n == 1) {
        result = CoefficientVector{-1, 1};
    } else {
        const auto primes = distinct_prime_factors(n);
        i64 repeated = 0;
        for (i64 p : primes)
            if ((n / p) % p == 0) {
                repeated = p;
                break;
            }
        if (repeated != 0) {
            // Phi_{pm}(x) = Phi_m(x^p) when p | m
            result = phi_dense_rec(n / repeated, memo).inflate(repeated);
        } else if (n % 2 == 0 && n > 2) {
            // Phi_{2m}(x) = Phi_m(-x) for odd m >= 3
            result = phi_dense_rec(n / 2, memo).negate_variable();
        } else {
            result = CoefficientVector::x_pow_minus_one(n);
            for (i64 d : divisors(n)) {
                if (d == n)
                    continue;
                auto [quot, rem] = divide_monic(result, phi_dense_rec(d, memo));
                if (!rem.is_zero())
                    throw InternalError("nonzero remainder dividing out Phi_" + std::to_string(d) + " from Phi_"
                                        + std::to_string(n));
                result = std::move(quot);
            }
        }
    }
    memo.emplace(n, result);
    return result;
}

} // namespace detail

/// Coefficients of Phi_n.
inline CoefficientVector phi_dense(i64 n, i64 size_limit = default_size_limit)
{
    if (n < 1)
        throw InvalidArgument("phi_dense: n must be positive, got " + std::to_string(n));
    const i64 deg = euler_phi(n);
    if (deg + 1 > size_limit)
        throw TooLarge("Phi_" + std::to_string(n) + " has " + std::to_string(deg + 1)
                       + " coefficients, above the limit of " + std::to_string(size_limit));
    // The division route builds x^n - 1 for squarefree n, so bound that too.
    if (n + 1 > 16 * size_limit)
        throw TooLarge("Phi_" + std::to_string(n) + " needs a degree-" + std::to_string(n)
                       + " intermediate, above the limit");
    std::map<i64, CoefficientVector> memo;
    return detail::phi_dense_rec(n, memo);
}

struct RadicalReduction {
    i64 core = 1;            // product of the distinct odd primes of n
    int odd_prime_count = 0; // order of Phi_core
};

/// A(n) = A(core) for n >= 3, since Phi_{pm}(x) = Phi_m(x^p) when p | m and
/// Phi_{2m}(x) = Phi_m(-x) for odd m.
inline RadicalReduction reduce_radical(i64 n)
{
    RadicalReduction r;
    for (i64 p : distinct_prime_factors(n)) {
        if (p == 2)
            continue;
        r.core *= p;
        ++r.odd_prime_count;
    }
    return r;
}

inline i64 height_oracle(i64 n, i64 size_limit = default_size_limit)
{
    return phi_dense(reduce_radical(n).core, size_limit).height();
}

} // namespace cyclo

#endif
