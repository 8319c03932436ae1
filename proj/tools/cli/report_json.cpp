#include "cli/report_json.hpp"

namespace mmsfair::cli {
namespace {

Json rationals(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

Json verdict(const ValueVerdict& v) { return Json{{"value", v.value.to_string()}, {"ok", v.ok}}; }

ValueVerdict verdict_from(const Json& j) {
    return {parse_rational(j.at("value").get<std::string>()), j.at("ok").get<bool>()};
}

}  // namespace

Json to_json(const Instance& instance) {
    Json out = Json::array();
    for (Value v : instance.items()) out.push_back(v);
    return out;
}

Json to_json(const MmsResult& result, const Instance& instance) {
    Json parts = Json::array();
    for (const auto& group : result.witness.groups()) {
        Json items = Json::array();
        for (std::size_t idx : group) items.push_back(idx);
        parts.push_back(std::move(items));
    }
    Json sums = Json::array();
    for (Value s : result.witness.part_sums(instance)) sums.push_back(s);
    return Json{{"value", result.value},
                {"witness", {{"part_of", result.witness.part_of}, {"parts", parts}, {"part_sums", sums}}}};
}

Json to_json(const Removal& removal) {
    return Json{{"removed", removal.removed.to_string()},
                {"by", removal.by.to_string()},
                {"q", removal.decomposition.q},
                {"r", removal.decomposition.r},
                {"text", removal.to_string()}};
}

Json to_json(const AgentReport& agent, std::size_t index) {
    Json j{{"agent", index}, {"entitlement", agent.entitlement.to_string()}, {"bundle_value", agent.bundle_value}};
    if (agent.omms) {
        Json reqs = Json::array();
        for (const auto& r : agent.omms->requirements) reqs.push_back({{"pair", r.pair.to_string()}, {"value", r.value}});
        j["omms"] = {{"requirements", reqs}, {"ok", agent.omms->ok}};
    }
    if (agent.wmms) j["wmms"] = verdict(*agent.wmms);
    if (agent.bmms) j["bmms"] = verdict(*agent.bmms);
    j["ok"] = agent.ok();
    return j;
}

Json to_json(const FairnessReport& report) {
    Json agents = Json::array();
    for (std::size_t i = 0; i < report.agents.size(); ++i) agents.push_back(to_json(report.agents[i], i));
    return Json{{"agents", agents}, {"all_ok", report.ok()}};
}

FairnessReport fairness_report_from_json(const Json& j) {
    FairnessReport report;
    for (const auto& a : j.at("agents")) {
        AgentReport agent;
        agent.entitlement = parse_rational(a.at("entitlement").get<std::string>());
        agent.bundle_value = a.at("bundle_value").get<Value>();
        if (a.contains("omms")) {
            OmmsVerdict v;
            for (const auto& r : a["omms"].at("requirements"))
                v.requirements.push_back({parse_pair(r.at("pair").get<std::string>()), r.at("value").get<Value>()});
            v.ok = a["omms"].at("ok").get<bool>();
            agent.omms = std::move(v);
        }
        if (a.contains("wmms")) agent.wmms = verdict_from(a["wmms"]);
        if (a.contains("bmms")) agent.bmms = verdict_from(a["bmms"]);
        report.agents.push_back(std::move(agent));
    }
    return report;
}

Json to_json(const ScanRow& row) {
    Json holds = Json::object();
    for (std::size_t k = 0; k < kImplicationCount; ++k) {
        Json flags = Json::array();
        for (const auto& h : row.holds) flags.push_back(h[k]);
        holds[name(static_cast<Implication>(k))] = flags;
    }
    std::vector<Rational> shares(row.entitlements.shares().begin(), row.entitlements.shares().end());
    return Json{{"instance", to_json(row.instance)},
                {"entitlements", rationals(shares)},
                {"omms", row.omms},
                {"wmms", rationals(row.wmms)},
                {"bmms", rationals(row.bmms)},
                {"holds", holds}};
}

Json summary_json(const ScanReport& report) {
    Json failures = Json::object();
    Json first = Json::object();
    for (std::size_t k = 0; k < kImplicationCount; ++k) {
        const char* key = name(static_cast<Implication>(k));
        failures[key] = report.failures[k];
        first[key] = report.first_failure[k] ? Json(*report.first_failure[k]) : Json(nullptr);
    }
    return Json{{"rows", report.rows.size()},
                {"instances", report.instances},
                {"vectors", report.vectors},
                {"failures", failures},
                {"first_failure", first},
                {"equal_entitlement_rows", report.equal_entitlement_rows},
                {"equal_entitlement_mismatches", report.equal_entitlement_mismatches},
                {"bmms_conjecture", report.bmms_conjecture()}};
}

Json to_json(const ScanReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) rows.push_back(to_json(row));
    return Json{{"summary", summary_json(report)}, {"rows", rows}};
}

}  // namespace mmsfair::cli
