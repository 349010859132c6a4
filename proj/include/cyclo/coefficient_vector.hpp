#ifndef CYCLO_COEFFICIENT_VECTOR_HPP
#define CYCLO_COEFFICIENT_VECTOR_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "ntheory.hpp"

namespace cyclo {

/// Dense polynomial with exact 64-bit integer coefficients; index = exponent.
/// Arithmetic is overflow-checked. The zero polynomial has no coefficients
/// and degree -1; otherwise the leading coefficient is nonzero.
class CoefficientVector {
public:
    CoefficientVector() = default;

    explicit CoefficientVector(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    CoefficientVector(std::initializer_list<i64> coeffs) : coeffs_(coeffs) { trim(); }

    /// x^n - 1
    static CoefficientVector x_pow_minus_one(i64 n)
    {
        std::vector<i64> c(static_cast<std::size_t>(n) + 1, 0);
        c.front() = -1;
        c.back() += 1;
        return CoefficientVector(std::move(c));
    }

    i64 degree() const noexcept { return static_cast<i64>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero outside [0, degree].
    i64 operator[](i64 i) const noexcept
    {
        return (i < 0 || i > degree()) ? 0 : coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<i64>& coeffs() const noexcept { return coeffs_; }

    /// Largest absolute coefficient (0 for the zero polynomial).
    i64 height() const noexcept
    {
        i64 h = 0;
        for (i64 c : coeffs_)
            h = std::max(h, c < 0 ? -c : c);
        return h;
    }

    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    bool is_palindromic() const noexcept
    {
        return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
    }

    /// f(x^k)
    CoefficientVector inflate(i64 k) const
    {
        if (is_zero())
            return {};
        std::vector<i64> c(static_cast<std::size_t>(checked_mul(degree(), k)) + 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i * static_cast<std::size_t>(k)] = coeffs_[i];
        return CoefficientVector(std::move(c));
    }

    /// f(-x)
    CoefficientVector negate_variable() const
    {
        std::vector<i64> c = coeffs_;
        for (std::size_t i = 1; i < c.size(); i += 2)
            c[i] = checked_sub(0, c[i]);
        return CoefficientVector(std::move(c));
    }

    friend CoefficientVector operator*(const CoefficientVector& a, const CoefficientVector& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<i64> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return CoefficientVector(std::move(c));
    }

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CoefficientVector& v)
    {
        os << '[';
        for (std::size_t i = 0; i < v.coeffs_.size(); ++i)
            os << (i ? "," : "") << v.coeffs_[i];
        return os << ']';
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<i64> coeffs_;
};

struct DivisionResult {
    CoefficientVector quotient;
    CoefficientVector remainder;
};

/// Synthetic division by a divisor with leading coefficient +-1, skipping the
/// divisor's zero coefficients in the inner loop.
inline DivisionResult divide_monic(const CoefficientVector& dividend, const CoefficientVector& divisor)
{
    if (divisor.is_zero())
        throw InvalidArgument("division by the zero polynomial");
    const i64 lead = divisor[divisor.degree()];
    if (lead != 1 && lead != -1)
        throw InvalidArgument("divisor must have leading coefficient +1 or -1");
    if (dividend.degree() < divisor.degree())
        return {CoefficientVector{}, dividend};

    std::vector<std::pair<i64, i64>> lower_terms; // (offset below leading, coefficient)
    const i64 dd = divisor.degree();
    for (i64 k = 0; k < dd; ++k)
        if (divisor[k] != 0)
            lower_terms.emplace_back(dd - k, divisor[k]);

    std::vector<i64> work = dividend.coeffs();
    const i64 qdeg = dividend.degree() - dd;
    std::vector<i64> quot(static_cast<std::size_t>(qdeg) + 1, 0);
    for (i64 top = dividend.degree(); top >= dd; --top) {
        const i64 c = work[static_cast<std::size_t>(top)];
        if (c == 0)
            continue;
        const i64 qc = lead == 1 ? c : checked_sub(0, c);
        quot[static_cast<std::size_t>(top - dd)] = qc;
        work[static_cast<std::size_t>(top)] = 0;
        for (auto [off, dc] : lower_terms) {
            auto& w = work[static_cast<std::size_t>(top - off)];
            w = checked_sub(w, checked_mul(qc, dc));
        }
    }
    work.resize(static_cast<std::size_t>(dd));
    return {CoefficientVector(std::move(quot)), CoefficientVector(std::move(work))};
}

} // namespace cyclo

#endif
