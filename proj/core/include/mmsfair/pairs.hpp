#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmsfair/dominance.hpp"
#include "mmsfair/rational.hpp"
#include "mmsfair/types.hpp"

namespace mmsfair {

/// The MMS conditions an agent with entitlement `entitlement` must check
/// on `item_count` items, sorted by d.
struct PairSet {
    std::vector<Pair> pairs;
    Rational entitlement;
    std::size_t item_count = 0;
};

/// One filtered candidate and the surviving pair that implies it.
struct Removal {
    Pair removed;
    Pair by;
    Decomposition decomposition;

    /// "0/1 is filtered out by 2/3 (with q=1, r=2)"
    std::string to_string() const;
};

/// (floor(a*d), d) for d = 1..m.
std::vector<Pair> candidate_pairs(const Rational& a, std::size_t m);

/// Candidates not implied by any other candidate. Mutually dominating
/// candidates (only possible with l = 0) are resolved in favour of the
/// smaller d, so the result does not depend on any iteration order.
PairSet non_dominated_pairs(const Rational& a, std::size_t m);

/// Every removed candidate, in order of d, with a surviving pair that
/// dominates it. Among several survivors the one whose dominance is a
/// direct special case (see corollary_case) is preferred, then the
/// smallest d.
std::vector<Removal> filtration_trace(const Rational& a, std::size_t m);

}  // namespace mmsfair
