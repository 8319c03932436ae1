#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mmsfair/mms.hpp"
#include "mmsfair/pairs.hpp"
#include "mmsfair/rational.hpp"
#include "mmsfair/types.hpp"

namespace mmsfair {

/// One bundle of item indices per agent; together an exact partition of
/// the instance's items. Bundles may be empty.
struct Allocation {
    std::vector<std::vector<std::size_t>> bundles;

    /// Throws std::invalid_argument unless the bundles partition 0..items-1.
    void validate(std::size_t items) const;
    Value bundle_value(const Instance& instance, std::size_t agent) const;
};

/// An OMMS condition with its exact MMS value on the instance.
struct Requirement {
    Pair pair;
    Value value = 0;

    friend bool operator==(const Requirement&, const Requirement&) = default;
};

/// Non-dominated pairs for (a, |instance|) with their MMS values. This
/// finite list is equivalent to checking every l/d <= a.
std::vector<Requirement> omms_requirements(const Instance& instance, const Rational& a,
                                           const SearchLimits& limits = {});

/// Largest value among omms_requirements, 0 if there are none.
Value omms_threshold(const Instance& instance, const Rational& a, const SearchLimits& limits = {});

bool is_omms_fair(const Instance& instance, const Rational& a, Value bundle_value,
                  const SearchLimits& limits = {});

/// max over n-partitions Y of min_j V(Y_j) / t_j, with an optimal partition.
struct WeightedMaximin {
    Rational level;
    PartitionAssignment witness;
};

/// Exact weighted maximin over all partitions labelled by agent. Agents
/// with equal entitlements are interchangeable and opened in index order;
/// agents with distinct entitlements are not.
WeightedMaximin weighted_maximin(const Instance& instance, const EntitlementVector& t,
                                 const SearchLimits& limits = {});

/// t_agent * weighted_maximin(instance, t).level
Rational wmms_value(const Instance& instance, const EntitlementVector& t, std::size_t agent,
                    const SearchLimits& limits = {});

/// t_i * max over 2-partitions (X, Y) of min(V(X)/t_i, V(Y)/(1 - t_i)).
/// Evaluated over all reachable subset sums. t_i = 1 gives the total.
Rational bmms_value(const Instance& instance, const Rational& t_i, const SearchLimits& limits = {});

struct Criteria {
    bool omms = true;
    bool wmms = true;
    bool bmms = true;
};

struct OmmsVerdict {
    std::vector<Requirement> requirements;
    bool ok = false;
};

struct ValueVerdict {
    Rational value;
    bool ok = false;
};

struct AgentReport {
    Rational entitlement;
    Value bundle_value = 0;
    std::optional<OmmsVerdict> omms;
    std::optional<ValueVerdict> wmms;
    std::optional<ValueVerdict> bmms;

    bool ok() const;
};

struct FairnessReport {
    std::vector<AgentReport> agents;

    bool ok() const;
};

/// Evaluates the selected criteria for every agent. Throws
/// std::invalid_argument on dimension mismatch and InstanceTooLarge past
/// the search limits.
FairnessReport audit(const Instance& instance, const EntitlementVector& t, const Allocation& alloc,
                     const Criteria& criteria = {}, const SearchLimits& limits = {});

}  // namespace mmsfair
