#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmsfair/types.hpp"

namespace mmsfair::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFalseVerdict = 1,
    kUsageError = 2,
    kRefused = 3,
};

/// Everything a command produces. `files` maps paths to contents the
/// caller should write; commands themselves never touch the filesystem.
struct Output {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
    std::map<std::string, std::string> files;
};

struct MmsOptions {
    std::vector<Value> items;
    std::uint32_t l = 1;
    std::uint32_t d = 1;
    std::size_t max_items = 16;
    std::uint32_t max_parts = 10;
    bool json = false;
};

struct DominatesOptions {
    std::uint32_t l = 1;
    std::uint32_t d = 1;
    std::uint32_t l_prime = 1;
    std::uint32_t d_prime = 1;
    bool json = false;
};

struct PairsOptions {
    std::string entitlement;
    std::size_t items_count = 0;
    bool trace = false;
    bool json = false;
};

struct AuditOptions {
    std::vector<Value> items;
    std::string entitlements;
    std::vector<std::vector<std::size_t>> allocation;
    std::vector<std::string> criteria{"omms", "wmms", "bmms"};
    std::size_t max_items = 16;
    std::uint32_t max_parts = 10;
    bool json = false;
};

struct ScanOptions {
    std::size_t max_items = 4;
    Value max_value = 5;
    Value value_step = 1;
    std::size_t agents = 2;
    std::uint64_t denominator = 5;
    /// Explicit vectors ("2/5,3/5"); when non-empty they replace the grid.
    std::vector<std::string> entitlements;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string output;
    bool json = false;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(MmsOptions, items, l, d, max_items, max_parts, json)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DominatesOptions, l, d, l_prime, d_prime, json)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PairsOptions, entitlement, items_count, trace, json)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(AuditOptions, items, entitlements, allocation, criteria, max_items,
                                                max_parts, json)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ScanOptions, max_items, max_value, value_step, agents, denominator,
                                                entitlements, samples, seed, output, json)

Output run_mms(const MmsOptions& opts);
Output run_dominates(const DominatesOptions& opts);
Output run_pairs(const PairsOptions& opts);
Output run_audit(const AuditOptions& opts);
Output run_scan(const ScanOptions& opts);

/// Re-executes a run record and reports whether every output matches.
Output run_replay(const std::string& record_text);

/// Full command line (without the program name): parsing, dispatch,
/// optional --record. File arguments are read here.
Output run(const std::vector<std::string>& args);

/// Semicolon-separated bundles of comma-separated item indices
/// ("0,3;1,2,4"), or a JSON array of arrays.
std::vector<std::vector<std::size_t>> parse_allocation(const std::string& text);

}  // namespace mmsfair::cli
