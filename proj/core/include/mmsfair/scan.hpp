#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmsfair/fairness.hpp"

namespace mmsfair {

/// Which instances and entitlement vectors a separation scan covers.
struct ScanBounds {
    std::size_t max_items = 0;
    Value max_value = 0;
    /// Item values range over {0, step, 2*step, ...} up to max_value.
    Value value_step = 1;
    std::vector<EntitlementVector> grid;
    /// 0 enumerates every multiset of 1..max_items values; otherwise this
    /// many random instances are drawn (duplicates collapse).
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Requirement-level implications between criteria for one agent. With an
/// additive valuation, criterion A implies B exactly when A's threshold is
/// at least B's.
enum class Implication : std::size_t {
    wmms_implies_omms,
    omms_implies_wmms,
    bmms_implies_wmms,
    bmms_implies_omms,
};
inline constexpr std::size_t kImplicationCount = 4;
const char* name(Implication imp) noexcept;

struct ScanRow {
    Instance instance;
    EntitlementVector entitlements;
    std::vector<Value> omms;  ///< largest OMMS requirement per agent
    std::vector<Rational> wmms;
    std::vector<Rational> bmms;
    std::vector<std::array<bool, kImplicationCount>> holds;  ///< per agent

    bool holds_for_all(Implication imp) const;
    bool equal_entitlements() const;
    /// omms == wmms == bmms for every agent
    bool criteria_coincide() const;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    std::size_t instances = 0;
    std::size_t vectors = 0;
    /// Rows in which the implication fails for at least one agent.
    std::array<std::size_t, kImplicationCount> failures{};
    std::array<std::optional<std::size_t>, kImplicationCount> first_failure{};
    std::size_t equal_entitlement_rows = 0;
    std::size_t equal_entitlement_mismatches = 0;

    /// Verdict on "BMMS implies both WMMS and OMMS" at this scan's scale.
    /// Always phrased as an observation, never as a theorem.
    std::string bmms_conjecture() const;
};

/// n-agent entitlement vectors whose shares are positive multiples of
/// 1/denominator, in lexicographic order.
std::vector<EntitlementVector> entitlement_grid(std::size_t agents, std::uint64_t denominator);

/// Instances covered by the bounds, canonical and sorted by (size, items).
std::vector<Instance> scan_instances(const ScanBounds& bounds);

/// Evaluates every instance against every grid vector and tallies where
/// OMMS, WMMS and BMMS requirements fail to imply each other.
ScanReport notion_separation_scan(const ScanBounds& bounds, const SearchLimits& limits = {});

/// Columns: instance, entitlements, omms, wmms, bmms, then one 0/1 column
/// per implication; per-agent values are space separated.
std::string to_csv(const ScanReport& report);

}  // namespace mmsfair
