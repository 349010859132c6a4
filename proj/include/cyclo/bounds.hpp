#ifndef CYCLO_BOUNDS_HPP
#define CYCLO_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

#include "ntheory.hpp"
#include "ternary_height.hpp"

namespace cyclo {

struct BzdegaParams {
    i64 alpha = 0;
    i64 beta = 0;
    i64 beta_star = 0;
};

/// alpha = min{q*, r*, p - q*, p - r*} (inverses mod p),
/// beta in (0, p) with alpha beta q r = 1 (mod p), beta* = min{beta, p - beta}.
inline BzdegaParams bzdega_params(const TripleParams& t)
{
    BzdegaParams b;
    b.alpha = std::min({t.q_p_star, t.r_p_star, t.p - t.q_p_star, t.p - t.r_p_star});
    b.beta = mod_inverse(b.alpha * t.q_bar_p % t.p * t.r_bar_p % t.p, t.p);
    b.beta_star = std::min(b.beta, t.p - b.beta);
    return b;
}

enum class BoundRule { bang, kaplan_one, residue, bzdega, conditional };

inline constexpr std::array<BoundRule, 5> all_bound_rules = {
    BoundRule::bang, BoundRule::kaplan_one, BoundRule::residue, BoundRule::bzdega, BoundRule::conditional};

inline constexpr std::string_view rule_name(BoundRule r) noexcept
{
    switch (r) {
    case BoundRule::bang: return "bang";
    case BoundRule::kaplan_one: return "kaplan_one";
    case BoundRule::residue: return "residue";
    case BoundRule::bzdega: return "bzdega";
    case BoundRule::conditional: return "conditional";
    }
    return "?";
}

inline std::optional<BoundRule> parse_rule(std::string_view s) noexcept
{
    for (BoundRule r : all_bound_rules)
        if (rule_name(r) == s)
            return r;
    return std::nullopt;
}

struct BoundEntry {
    BoundRule rule;
    i64 value;
    bool applicable;
};

struct BoundCertificate {
    std::array<BoundEntry, 5> entries{};
    i64 best = 0;
    BoundRule best_rule = BoundRule::bang;
    i64 beiter_ref = 0;    // (p + 1) / 2, conjectural reference line
    i64 corrected_ref = 0; // floor(2p / 3), conjectural reference line

    const BoundEntry& entry(BoundRule r) const { return entries[static_cast<std::size_t>(r)]; }
};

inline i64 beiter_line(i64 p) noexcept { return (p + 1) / 2; }
inline i64 corrected_line(i64 p) noexcept { return 2 * p / 3; }

/// Whether min{q mod p, p - q mod p, r mod p, p - r mod p} > (p - 1) / 3,
/// compared exactly as 3 min > p - 1.
inline bool conditional_hypothesis(const TripleParams& t) noexcept
{
    const i64 m = std::min({t.q_bar_p, t.p - t.q_bar_p, t.r_bar_p, t.p - t.r_bar_p});
    return 3 * m > t.p - 1;
}

/// Evaluates every upper bound on A(pqr). Real-valued bounds are floored.
/// `best` is the minimum over applicable rules; ties go to the earlier rule
/// in declaration order.
inline BoundCertificate bound_certificate(const TripleParams& t)
{
    const BzdegaParams b = bzdega_params(t);
    BoundCertificate c;
    c.entries[0] = {BoundRule::bang, t.p - 1, true};
    c.entries[1] = {BoundRule::kaplan_one, 1, t.r_bar == 1 || t.r_bar == t.pq - 1};
    c.entries[2] = {BoundRule::residue, std::min(t.r_bar, t.pq - t.r_bar), true};
    c.entries[3] = {BoundRule::bzdega, std::min(2 * b.alpha + b.beta_star, t.p - b.beta_star), true};
    c.entries[4] = {BoundRule::conditional, std::min(t.p - b.beta_star, (t.p + b.beta_star) / 2),
                    conditional_hypothesis(t)};
    c.best = c.entries[0].value;
    c.best_rule = c.entries[0].rule;
    for (const auto& e : c.entries) {
        if (e.applicable && e.value < c.best) {
            c.best = e.value;
            c.best_rule = e.rule;
        }
    }
    c.beiter_ref = beiter_line(t.p);
    c.corrected_ref = corrected_line(t.p);
    return c;
}

} // namespace cyclo

#endif
