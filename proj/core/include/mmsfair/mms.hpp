#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "mmsfair/types.hpp"

namespace mmsfair {

/// Refusal thresholds for exact partition search. Exact MMS is NP-hard, so
/// inputs beyond these are rejected instead of searched.
struct SearchLimits {
    std::size_t max_items = 16;
    std::uint32_t max_parts = 10;
};

/// Thrown when an input exceeds SearchLimits.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_limits(std::size_t items, std::uint32_t parts, const SearchLimits& limits);

struct MmsResult {
    Value value = 0;
    PartitionAssignment witness;
};

/// Sum of the l smallest entries; the worst union of exactly l parts under
/// an additive valuation.
Value min_l_union(std::span<const Value> part_sums, std::size_t l);

/// l-out-of-d maximin share of `instance` under the additive ordering.
///
/// Depth-first search over assignments of items (largest first) to parts.
/// Parts are opened in index order and equal items go to non-decreasing
/// parts, so each partition is visited once. A subtree is cut when a
/// water-filling relaxation of the remaining value cannot beat the
/// incumbent. The witness is the lexicographically smallest optimal
/// assignment in that visiting order, reported against the caller's item
/// order.
MmsResult mms(const Instance& instance, Pair pair, const SearchLimits& limits = {});

/// MMS of m unit-valued items: with m = q*d - r, the most balanced
/// partition has r parts of q-1 items and d-r parts of q items, giving
/// q*l - min(l, r).
std::uint64_t mms_cardinality(std::uint64_t m, Pair pair);

}  // namespace mmsfair
