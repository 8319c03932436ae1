#pragma once

#include <cstdint>
#include <optional>

#include "mmsfair/types.hpp"

namespace mmsfair {

/// d' = q*d - r with q >= 1 and 0 <= r < d.
struct Decomposition {
    std::uint64_t q = 1;
    std::uint64_t r = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(std::uint64_t d, std::uint64_t d_prime);

/// q*l - min(l, r) for (q, r) = decompose(p.d, d'): the MMS of d' unit
/// items under p, and the largest l' that p dominates at denominator d'.
std::uint64_t guaranteed_count(Pair p, std::uint32_t d_prime);

/// True iff the l-out-of-d MMS is at least the l'-out-of-d' MMS for every
/// finite item set and monotone subset ordering.
bool dominates(Pair p, Pair p_prime);

/// Special cases in which dominance is immediate.
enum class CorollaryCase {
    a,  ///< l > l' and d = d'
    b,  ///< l = l' and d < d'
    c,  ///< l' = l - k and d' = d - k for some k >= 1
    d,  ///< l/d is the reduced form of the non-reduced fraction l'/d'
};

char label(CorollaryCase c) noexcept;

/// First matching special case, in the order a, b, c, d. Every returned
/// case implies dominates(p, p_prime).
std::optional<CorollaryCase> corollary_case(Pair p, Pair p_prime);

/// d' unit items, on which p's MMS is q*l - min(l, r) < l' = p_prime's MMS.
/// Throws std::invalid_argument when p dominates p_prime.
Instance non_dominance_witness(Pair p, Pair p_prime);

/// For instances of at most m items, p's MMS is at least p_prime's when
/// m <= p.d and p_prime = (p.l + h, p.d + h) for some h >= 0.
bool bundle_size_reduction_applies(Pair p, Pair p_prime, std::size_t m);

}  // namespace mmsfair
