#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmsfair/rational.hpp"

namespace mmsfair {

/// Non-negative item value under an additive valuation.
using Value = std::uint64_t;

/// Multiset of item values. The total is computed once; construction
/// throws std::overflow_error if it would wrap, so every subset sum of a
/// constructed instance is representable.
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<Value> items);

    /// m items of value 1: the cardinality ordering as an additive one.
    static Instance units(std::size_t m);

    std::span<const Value> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    Value operator[](std::size_t i) const { return items_.at(i); }
    Value total() const noexcept { return total_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Value> items_;
    Value total_ = 0;
};

/// Items sorted non-increasing. Idempotent.
Instance canonicalize(const Instance& instance);

/// Integers separated by commas and/or whitespace, or a JSON array of
/// non-negative integers. Empty text is the empty instance.
Instance parse_instance(std::string_view text);

std::string to_string(const Instance& instance);

/// An l-out-of-d condition, 0 <= l <= d, d >= 1.
class Pair {
public:
    Pair(std::uint32_t l, std::uint32_t d);

    std::uint32_t l() const noexcept { return l_; }
    std::uint32_t d() const noexcept { return d_; }

    /// "l/d"
    std::string to_string() const;

    friend bool operator==(const Pair&, const Pair&) = default;
    /// Orders by d, then l.
    friend std::strong_ordering operator<=>(const Pair& a, const Pair& b) noexcept {
        if (auto c = a.d_ <=> b.d_; c != 0) return c;
        return a.l_ <=> b.l_;
    }

private:
    std::uint32_t l_;
    std::uint32_t d_;
};

/// Parses "l/d".
Pair parse_pair(std::string_view text);

/// Item index -> part index, for a partition into `parts` (possibly empty) parts.
struct PartitionAssignment {
    std::vector<std::uint32_t> part_of;
    std::uint32_t parts = 1;

    std::vector<Value> part_sums(const Instance& instance) const;
    /// Item indices grouped by part.
    std::vector<std::vector<std::size_t>> groups() const;

    friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;
};

/// Strictly positive rational shares summing exactly to one.
class EntitlementVector {
public:
    explicit EntitlementVector(std::vector<Rational> shares);

    /// n equal shares of 1/n.
    static EntitlementVector equal(std::size_t n);

    std::span<const Rational> shares() const noexcept { return shares_; }
    std::size_t size() const noexcept { return shares_.size(); }
    const Rational& operator[](std::size_t i) const { return shares_.at(i); }

    friend bool operator==(const EntitlementVector&, const EntitlementVector&) = default;

private:
    std::vector<Rational> shares_;
};

/// Comma-separated rationals, e.g. "2/5,3/5" or "0.4,0.6".
EntitlementVector parse_entitlements(std::string_view text);

std::string to_string(const EntitlementVector& t);

}  // namespace mmsfair
