#pragma once

#include <json.hpp>

#include "mmsfair/fairness.hpp"
#include "mmsfair/mms.hpp"
#include "mmsfair/pairs.hpp"
#include "mmsfair/scan.hpp"

namespace mmsfair::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& instance);
Json to_json(const MmsResult& result, const Instance& instance);
Json to_json(const Removal& removal);

Json to_json(const AgentReport& agent, std::size_t index);
Json to_json(const FairnessReport& report);
FairnessReport fairness_report_from_json(const Json& j);

Json to_json(const ScanRow& row);
Json summary_json(const ScanReport& report);
Json to_json(const ScanReport& report);

}  // namespace mmsfair::cli
