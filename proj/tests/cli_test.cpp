#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "cli/report_json.hpp"
#include "mmsfair/fairness.hpp"

using namespace mmsfair;
using namespace mmsfair::cli;

namespace {

Output invoke(std::initializer_list<std::string> args) { return run(std::vector<std::string>(args)); }

Json parsed(const Output& o) { return Json::parse(o.out); }

}  // namespace

TEST(CliMms, TextAndJson) {
    const auto text = invoke({"mms", "--items", "1,3,5,6,9", "--pair", "1/3"});
    EXPECT_EQ(text.exit_code, kSuccess);
    EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "MMS 1/3 of [1,3,5,6,9] = 7");

    const auto json = parsed(invoke({"mms", "--items", "1 3 5 6 9", "--pair", "3/5", "--json"}));
    EXPECT_EQ(json["command"], "mms");
    EXPECT_EQ(json["value"], 9);
    EXPECT_EQ(json["witness"]["part_of"].size(), 5u);
}

TEST(CliMms, InstanceFile) {
    const std::string path = ::testing::TempDir() + "cli_instance.json";
    std::ofstream(path) << "[40, 60]";
    EXPECT_EQ(parsed(invoke({"mms", "--instance", path, "--pair", "1/2", "--json"}))["value"], 40);
    std::remove(path.c_str());
}

TEST(CliMms, ExitCodes) {
    EXPECT_EQ(invoke({"mms", "--items", "1,2", "--pair", "3/2"}).exit_code, kUsageError);
    EXPECT_EQ(invoke({"mms", "--items", "1,,2", "--pair", "1/2"}).exit_code, kUsageError);
    EXPECT_EQ(invoke({"mms", "--pair", "1/2"}).exit_code, kUsageError);
    EXPECT_EQ(invoke({"mms", "--items", "1,2"}).exit_code, kUsageError);
    EXPECT_EQ(invoke({"frobnicate"}).exit_code, kUsageError);
    const auto refused = invoke({"mms", "--items", "1,2,3,4,5", "--pair", "1/3", "--max-items", "4"});
    EXPECT_EQ(refused.exit_code, kRefused);
    EXPECT_NE(refused.err.find("too large"), std::string::npos);
    const auto help = invoke({"--help"});
    EXPECT_EQ(help.exit_code, kSuccess);
    EXPECT_NE(help.out.find("dominates"), std::string::npos);
}

TEST(CliDominates, VerdictAndWitness) {
    const auto yes = invoke({"dominates", "2", "3", "4", "7", "--json"});
    EXPECT_EQ(yes.exit_code, kSuccess);
    EXPECT_TRUE(parsed(yes)["witness"].is_null());

    const auto no = invoke({"dominates", "2", "3", "5", "7", "--json"});
    EXPECT_EQ(no.exit_code, kFalseVerdict);
    const auto j = parsed(no);
    EXPECT_EQ(j["q"], 3);
    EXPECT_EQ(j["r"], 2);
    EXPECT_EQ(j["guaranteed"], 4);
    EXPECT_EQ(j["witness"]["unit_items"], 7);
    EXPECT_EQ(j["witness"]["mms_p"], 4);
    EXPECT_EQ(j["witness"]["mms_p_prime"], 5);

    EXPECT_EQ(parsed(invoke({"dominates", "3", "4", "2", "4", "--json"}))["corollary_case"], "a");
    EXPECT_EQ(invoke({"dominates", "4", "3", "1", "2"}).exit_code, kUsageError);
}

TEST(CliPairs, TraceText) {
    const auto o = invoke({"pairs", "--entitlement", "0.74", "--items-count", "7", "--trace"});
    EXPECT_EQ(o.exit_code, kSuccess);
    EXPECT_EQ(o.out,
              "0/1 is filtered out by 2/3 (with q=1, r=2)\n"
              "1/2 is filtered out by 2/3 (with q=1, r=1)\n"
              "2/4 is filtered out by 2/3 (with q=2, r=2)\n"
              "3/5 is filtered out by 5/7 (with q=1, r=2)\n"
              "4/6 is filtered out by 2/3 (with q=2, r=0)\n"
              "2/3\n5/7\n");
    EXPECT_EQ(invoke({"pairs", "--entitlement", "1.5", "--items-count", "3"}).exit_code, kUsageError);
}

TEST(CliPairs, Json) {
    const auto j = parsed(invoke({"pairs", "--entitlement", "37/50", "--items-count", "7", "--trace", "--json"}));
    EXPECT_EQ(j["pairs"], Json::array({"2/3", "5/7"}));
    EXPECT_EQ(j["trace"].size(), 5u);
    EXPECT_EQ(j["trace"][3]["by"], "5/7");
}

TEST(CliAudit, VerdictsAndExitCode) {
    const auto fair = invoke({"audit", "--items", "40,60", "--entitlements", "2/5,3/5", "--allocation", "0;1"});
    EXPECT_EQ(fair.exit_code, kSuccess);

    const auto unfair =
        invoke({"audit", "--items", "40,60", "--entitlements", "0.6,0.2,0.2", "--allocation", "[[],[0],[1]]", "--json"});
    EXPECT_EQ(unfair.exit_code, kFalseVerdict);
    const auto j = parsed(unfair);
    EXPECT_FALSE(j["all_ok"].get<bool>());
    EXPECT_FALSE(j["agents"][0]["omms"]["ok"].get<bool>());
    EXPECT_TRUE(j["agents"][0]["wmms"]["ok"].get<bool>());

    const auto only_wmms = invoke({"audit", "--items", "40,60", "--entitlements", "0.6,0.2,0.2", "--allocation",
                                ";0;1", "--criteria", "wmms"});
    EXPECT_EQ(only_wmms.exit_code, kSuccess);
    EXPECT_EQ(invoke({"audit", "--items", "1,2", "--entitlements", "1/2,1/2", "--allocation", "0;0"}).exit_code,
              kUsageError);
    EXPECT_EQ(invoke({"audit", "--items", "1,2", "--entitlements", "1/2,1/2", "--allocation", "0;1", "--criteria",
                   "envy"})
                  .exit_code,
              kUsageError);
}

TEST(CliAudit, ReportRoundTrips) {
    const auto o = invoke({"audit", "--items", "1,3,5,6,9", "--entitlements", "2/5,3/5", "--allocation", "0,3;1,2,4",
                        "--json"});
    const Json j = parsed(o);
    EXPECT_EQ(j.dump(2) + "\n", o.out);
    const FairnessReport report = fairness_report_from_json(j);
    const Json again = to_json(report);
    EXPECT_EQ(again["agents"], j["agents"]);
    EXPECT_EQ(again["all_ok"], j["all_ok"]);
}

TEST(CliScan, OutputsAndDeterminism) {
    const std::string csv = ::testing::TempDir() + "scan.csv";
    const auto a = invoke({"scan", "--max-items", "3", "--max-value", "3", "--agents", "3", "--denominator", "3",
                        "--output", csv});
    EXPECT_EQ(a.exit_code, kSuccess);
    ASSERT_EQ(a.files.count(csv), 1u);
    EXPECT_EQ(a.files.at(csv).substr(0, 9), "instance,");
    EXPECT_NE(a.out.find("BMMS conjecture"), std::string::npos);

    std::initializer_list<std::string> sampled{"scan", "--max-items", "5", "--max-value", "9", "--samples", "50",
                                               "--seed", "3", "--json"};
    const auto first = invoke(sampled);
    EXPECT_EQ(first.out, invoke(sampled).out);
    // Duplicate draws collapse, so at most 50 distinct instances remain.
    const auto instances = parsed(first)["summary"]["instances"].get<std::size_t>();
    EXPECT_GT(instances, 0u);
    EXPECT_LE(instances, 50u);
}

TEST(CliReplay, RecordAndReplay) {
    const std::string record = ::testing::TempDir() + "record.json";
    const auto o = invoke({"--record", record, "pairs", "--entitlement", "2/5", "--items-count", "5"});
    ASSERT_EQ(o.files.count(record), 1u);
    const Json rec = Json::parse(o.files.at(record));
    EXPECT_EQ(rec["command"], "pairs");
    EXPECT_EQ(rec["outputs"]["stdout"], o.out);
    EXPECT_TRUE(rec.contains("engine_version"));

    const auto ok = run_replay(o.files.at(record));
    EXPECT_EQ(ok.exit_code, kSuccess);

    Json tampered = rec;
    tampered["outputs"]["stdout"] = "1/3\n";
    const auto bad = run_replay(tampered.dump());
    EXPECT_EQ(bad.exit_code, kFalseVerdict);
    EXPECT_NE(bad.out.find("stdout"), std::string::npos);
    EXPECT_EQ(run_replay("{not json").exit_code, kUsageError);
}
