#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/report_json.hpp"
#include "mmsfair/dominance.hpp"
#include "mmsfair/fairness.hpp"
#include "mmsfair/mms.hpp"
#include "mmsfair/pairs.hpp"
#include "mmsfair/scan.hpp"
#include "mmsfair/version.hpp"

namespace mmsfair::cli {
namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_ordered(const nlohmann::json& j) { return Json::parse(j.dump()); }

// Maps library exceptions onto the documented exit codes.
Output guarded(const std::function<Output()>& body) {
    try {
        return body();
    } catch (const InstanceTooLarge& e) {
        return {kRefused, "", std::string("error: ") + e.what() + "\n", {}};
    } catch (const std::overflow_error& e) {
        return {kRefused, "", std::string("error: arithmetic range exceeded: ") + e.what() + "\n", {}};
    } catch (const std::invalid_argument& e) {
        return {kUsageError, "", std::string("error: ") + e.what() + "\n", {}};
    } catch (const nlohmann::json::exception& e) {
        return {kUsageError, "", std::string("error: malformed JSON: ") + e.what() + "\n", {}};
    }
}

std::string braces(const Instance& inst, const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(inst[idx[k]]);
    return s + "}";
}

std::vector<std::string> pair_strings(const std::vector<Pair>& pairs) {
    std::vector<std::string> out;
    for (Pair p : pairs) out.push_back(p.to_string());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Value> instance_items(const std::string& inline_items, bool have_inline, const std::string& file) {
    if (have_inline && !file.empty()) throw std::invalid_argument("give either --items or --instance, not both");
    if (!have_inline && file.empty()) throw std::invalid_argument("an instance is required (--items or --instance)");
    const Instance inst = parse_instance(have_inline ? inline_items : read_file(file));
    return {inst.items().begin(), inst.items().end()};
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty item index in allocation");
        tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
        std::size_t pos = 0;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("item index is not a non-negative integer: '" + tok + "'");
        out.push_back(std::stoull(tok, &pos));
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> parse_allocation(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        try {
            return nlohmann::json::parse(text).get<std::vector<std::vector<std::size_t>>>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed allocation JSON: ") + e.what());
        }
    }
    std::vector<std::vector<std::size_t>> bundles;
    std::size_t start = 0;
    for (;;) {
        const auto semi = text.find(';', start);
        bundles.push_back(parse_indices(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return bundles;
}

Output run_mms(const MmsOptions& opts) {
    return guarded([&] {
        const Instance inst(opts.items);
        const Pair pair(opts.l, opts.d);
        const MmsResult result = mms(inst, pair, SearchLimits{opts.max_items, opts.max_parts});
        Output o;
        if (opts.json) {
            Json j{{"command", "mms"}, {"items", to_json(inst)}, {"pair", pair.to_string()}};
            j.update(to_json(result, inst));
            o.out = dump(j);
        } else {
            std::ostringstream s;
            s << "MMS " << pair.to_string() << " of " << to_string(inst) << " = " << result.value << "\n";
            const auto groups = result.witness.groups();
            const auto sums = result.witness.part_sums(inst);
            for (std::size_t k = 0; k < groups.size(); ++k)
                s << "part " << k << ": " << braces(inst, groups[k]) << " sum " << sums[k] << "\n";
            o.out = s.str();
        }
        return o;
    });
}

Output run_dominates(const DominatesOptions& opts) {
    return guarded([&] {
        const Pair p(opts.l, opts.d), pp(opts.l_prime, opts.d_prime);
        const auto dec = decompose(p.d(), pp.d());
        const std::uint64_t guaranteed = guaranteed_count(p, pp.d());
        const bool yes = dominates(p, pp);
        const auto special = corollary_case(p, pp);
        Output o;
        o.exit_code = yes ? kSuccess : kFalseVerdict;

        Json witness = nullptr;
        if (!yes) {
            const Instance w = non_dominance_witness(p, pp);
            witness = Json{{"unit_items", w.size()},
                           {"mms_p", mms_cardinality(w.size(), p)},
                           {"mms_p_prime", mms_cardinality(w.size(), pp)}};
        }
        if (opts.json) {
            o.out = dump(Json{{"command", "dominates"},
                              {"p", p.to_string()},
                              {"p_prime", pp.to_string()},
                              {"q", dec.q},
                              {"r", dec.r},
                              {"guaranteed", guaranteed},
                              {"dominates", yes},
                              {"corollary_case", special ? Json(std::string(1, label(*special))) : Json(nullptr)},
                              {"witness", witness}});
        } else {
            std::ostringstream s;
            s << p.to_string() << " dominates " << pp.to_string() << ": " << (yes ? "yes" : "no") << "\n";
            s << "q=" << dec.q << " r=" << dec.r << " q*l-min(l,r)=" << guaranteed << (yes ? " >= " : " < ")
              << "l'=" << pp.l() << "\n";
            if (special) s << "special case (" << label(*special) << ")\n";
            if (!yes)
                s << "witness: " << witness["unit_items"].get<std::size_t>() << " unit items; MMS " << p.to_string()
                  << " = " << witness["mms_p"].get<std::uint64_t>() << " < MMS " << pp.to_string() << " = "
                  << witness["mms_p_prime"].get<std::uint64_t>() << "\n";
            o.out = s.str();
        }
        return o;
    });
}

Output run_pairs(const PairsOptions& opts) {
    return guarded([&] {
        const Rational a = parse_rational(opts.entitlement);
        const PairSet set = non_dominated_pairs(a, opts.items_count);
        Output o;
        if (opts.json) {
            Json j{{"command", "pairs"},
                   {"entitlement", a.to_string()},
                   {"items_count", opts.items_count},
                   {"candidates", pair_strings(candidate_pairs(a, opts.items_count))},
                   {"pairs", pair_strings(set.pairs)}};
            if (opts.trace) {
                Json trace = Json::array();
                for (const auto& r : filtration_trace(a, opts.items_count)) trace.push_back(to_json(r));
                j["trace"] = trace;
            }
            o.out = dump(j);
        } else {
            std::ostringstream s;
            if (opts.trace)
                for (const auto& r : filtration_trace(a, opts.items_count)) s << r.to_string() << "\n";
            for (Pair p : set.pairs) s << p.to_string() << "\n";
            o.out = s.str();
        }
        return o;
    });
}

Output run_audit(const AuditOptions& opts) {
    return guarded([&] {
        const Instance inst(opts.items);
        const EntitlementVector t = parse_entitlements(opts.entitlements);
        Criteria criteria{false, false, false};
        for (const auto& c : opts.criteria) {
            if (c == "omms") criteria.omms = true;
            else if (c == "wmms") criteria.wmms = true;
            else if (c == "bmms") criteria.bmms = true;
            else throw std::invalid_argument("unknown criterion '" + c + "' (expected omms, wmms or bmms)");
        }
        const Allocation alloc{opts.allocation};
        const FairnessReport report = audit(inst, t, alloc, criteria, SearchLimits{opts.max_items, opts.max_parts});

        Output o;
        o.exit_code = report.ok() ? kSuccess : kFalseVerdict;
        if (opts.json) {
            std::vector<std::string> shares;
            for (const auto& s : t.shares()) shares.push_back(s.to_string());
            Json j{{"command", "audit"},
                   {"items", to_json(inst)},
                   {"entitlements", shares},
                   {"allocation", opts.allocation},
                   {"criteria", opts.criteria}};
            j.update(to_json(report));
            o.out = dump(j);
        } else {
            std::ostringstream s;
            for (std::size_t i = 0; i < report.agents.size(); ++i) {
                const auto& a = report.agents[i];
                s << "agent " << i << " (entitlement " << a.entitlement << "): bundle " << braces(inst, alloc.bundles[i])
                  << " value " << a.bundle_value << "\n";
                if (a.omms) {
                    s << "  omms " << (a.omms->ok ? "ok  " : "FAIL") << " requires";
                    if (a.omms->requirements.empty()) s << " nothing";
                    for (const auto& r : a.omms->requirements) s << " " << r.pair.to_string() << "=" << r.value;
                    s << "\n";
                }
                if (a.wmms) s << "  wmms " << (a.wmms->ok ? "ok  " : "FAIL") << " requires " << a.wmms->value << "\n";
                if (a.bmms) s << "  bmms " << (a.bmms->ok ? "ok  " : "FAIL") << " requires " << a.bmms->value << "\n";
            }
            s << (report.ok() ? "fair under all checked criteria\n" : "NOT fair under all checked criteria\n");
            o.out = s.str();
        }
        return o;
    });
}

Output run_scan(const ScanOptions& opts) {
    return guarded([&] {
        ScanBounds bounds;
        bounds.max_items = opts.max_items;
        bounds.max_value = opts.max_value;
        bounds.value_step = opts.value_step;
        bounds.samples = opts.samples;
        bounds.seed = opts.seed;
        if (opts.entitlements.empty()) {
            bounds.grid = entitlement_grid(opts.agents, opts.denominator);
        } else {
            for (const auto& text : opts.entitlements) bounds.grid.push_back(parse_entitlements(text));
        }
        const ScanReport report = notion_separation_scan(bounds);

        Output o;
        if (!opts.output.empty()) {
            const bool as_json = opts.output.size() >= 5 && opts.output.substr(opts.output.size() - 5) == ".json";
            o.files[opts.output] = as_json ? dump(to_json(report)) : to_csv(report);
        }
        if (opts.json) {
            Json j{{"command", "scan"}, {"seed", opts.seed}};
            j.update(to_json(report));
            o.out = dump(j);
            return o;
        }
        std::ostringstream s;
        s << "scanned " << report.rows.size() << " rows (" << report.instances << " instances x " << report.vectors
          << " entitlement vectors)\n";
        auto describe = [&](std::size_t row) {
            const auto& r = report.rows[row];
            return to_string(r.instance) + " t=" + to_string(r.entitlements);
        };
        for (std::size_t k = 0; k < kImplicationCount; ++k) {
            s << name(static_cast<Implication>(k)) << ": fails in " << report.failures[k] << " rows";
            if (report.first_failure[k]) s << " (first: " << describe(*report.first_failure[k]) << ")";
            s << "\n";
        }
        s << "equal entitlements: " << report.equal_entitlement_rows << " rows, "
          << report.equal_entitlement_mismatches << " where OMMS, WMMS and BMMS requirements differ\n";
        const bool counterexample = report.failures[static_cast<std::size_t>(Implication::bmms_implies_wmms)] +
                                        report.failures[static_cast<std::size_t>(Implication::bmms_implies_omms)] >
                                    0;
        s << (counterexample ? "!!! BMMS conjecture: " : "BMMS conjecture: ") << report.bmms_conjecture() << "\n";
        o.out = s.str();
        return o;
    });
}

Output run_replay(const std::string& record_text) {
    return guarded([&] {
        const Json record = Json::parse(record_text);
        const std::string command = record.at("command").get<std::string>();
        const nlohmann::json inputs = nlohmann::json::parse(record.at("inputs").dump());
        Output fresh;
        if (command == "mms") fresh = run_mms(inputs.get<MmsOptions>());
        else if (command == "dominates") fresh = run_dominates(inputs.get<DominatesOptions>());
        else if (command == "pairs") fresh = run_pairs(inputs.get<PairsOptions>());
        else if (command == "audit") fresh = run_audit(inputs.get<AuditOptions>());
        else if (command == "scan") fresh = run_scan(inputs.get<ScanOptions>());
        else throw std::invalid_argument("record has unknown command '" + command + "'");

        const Json& expected = record.at("outputs");
        std::vector<std::string> mismatches;
        if (expected.at("exit_code").get<int>() != fresh.exit_code) mismatches.push_back("exit_code");
        if (expected.at("stdout").get<std::string>() != fresh.out) mismatches.push_back("stdout");
        if (expected.at("files").get<std::map<std::string, std::string>>() != fresh.files) mismatches.push_back("files");

        Output o;
        if (mismatches.empty()) {
            o.out = "replay of '" + command + "': outputs match\n";
        } else {
            o.exit_code = kFalseVerdict;
            o.out = "replay of '" + command + "': mismatch in";
            for (const auto& m : mismatches) o.out += " " + m;
            o.out += "\n";
        }
        return o;
    });
}

Output run(const std::vector<std::string>& args) {
    CLI::App app{"Exact maximin-share fairness toolkit", "mmsfair"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    std::string record_path;
    app.add_option("--record", record_path, "Write a replayable run record (JSON) to this file");

    MmsOptions mms_opts;
    std::string mms_items, mms_file, mms_pair;
    auto* mms_cmd = app.add_subcommand("mms", "l-out-of-d maximin share of an instance");
    auto* mms_items_opt = mms_cmd->add_option("--items", mms_items, "Item values, comma or space separated");
    mms_cmd->add_option("--instance", mms_file, "File with item values (text or JSON array)");
    mms_cmd->add_option("--pair", mms_pair, "Condition l/d")->required();
    mms_cmd->add_option("--max-items", mms_opts.max_items, "Refuse instances with more items");
    mms_cmd->add_option("--max-parts", mms_opts.max_parts, "Refuse larger d");
    mms_cmd->add_flag("--json", mms_opts.json, "JSON output");

    DominatesOptions dom_opts;
    auto* dom_cmd = app.add_subcommand("dominates", "Does l/d dominate l'/d'? (exit 0 yes, 1 no)");
    dom_cmd->add_option("l", dom_opts.l)->required();
    dom_cmd->add_option("d", dom_opts.d)->required();
    dom_cmd->add_option("l_prime", dom_opts.l_prime)->required();
    dom_cmd->add_option("d_prime", dom_opts.d_prime)->required();
    dom_cmd->add_flag("--json", dom_opts.json, "JSON output");

    PairsOptions pairs_opts;
    auto* pairs_cmd = app.add_subcommand("pairs", "Non-dominated MMS conditions for an entitlement");
    pairs_cmd->add_option("--entitlement", pairs_opts.entitlement, "Entitlement as p/q or decimal")->required();
    pairs_cmd->add_option("--items-count", pairs_opts.items_count, "Number of items")->required();
    pairs_cmd->add_flag("--trace", pairs_opts.trace, "Explain every filtered candidate");
    pairs_cmd->add_flag("--json", pairs_opts.json, "JSON output");

    AuditOptions audit_opts;
    std::string audit_items, audit_file, audit_alloc, audit_alloc_file, audit_criteria;
    auto* audit_cmd = app.add_subcommand("audit", "Check an allocation against OMMS, WMMS and BMMS");
    auto* audit_items_opt = audit_cmd->add_option("--items", audit_items, "Item values");
    audit_cmd->add_option("--instance", audit_file, "File with item values (text or JSON array)");
    audit_cmd->add_option("--entitlements", audit_opts.entitlements, "Comma-separated entitlements")->required();
    audit_cmd->add_option("--allocation", audit_alloc, "Bundles of item indices, e.g. \"0,3;1,2,4\" or JSON");
    audit_cmd->add_option("--allocation-file", audit_alloc_file, "File holding the allocation");
    audit_cmd->add_option("--criteria", audit_criteria, "Subset of omms,wmms,bmms");
    audit_cmd->add_option("--max-items", audit_opts.max_items, "Refuse instances with more items");
    audit_cmd->add_option("--max-parts", audit_opts.max_parts, "Refuse more agents");
    audit_cmd->add_flag("--json", audit_opts.json, "JSON output");

    ScanOptions scan_opts;
    auto* scan_cmd = app.add_subcommand("scan", "Search small instances for separations between criteria");
    scan_cmd->add_option("--max-items", scan_opts.max_items, "Largest instance size");
    scan_cmd->add_option("--max-value", scan_opts.max_value, "Largest item value");
    scan_cmd->add_option("--value-step", scan_opts.value_step, "Item values are multiples of this");
    scan_cmd->add_option("--agents", scan_opts.agents, "Agents in the generated entitlement grid");
    scan_cmd->add_option("--denominator", scan_opts.denominator, "Grid shares are multiples of 1/denominator");
    scan_cmd->add_option("--entitlements", scan_opts.entitlements, "Explicit vector(s), replaces the grid");
    scan_cmd->add_option("--samples", scan_opts.samples, "Random instances to draw (0 = exhaustive)");
    scan_cmd->add_option("--seed", scan_opts.seed, "Random seed");
    scan_cmd->add_option("--output", scan_opts.output, "Write the full report (CSV, or JSON for *.json)");
    scan_cmd->add_flag("--json", scan_opts.json, "JSON output");

    std::string replay_file;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run a recorded invocation and compare outputs");
    replay_cmd->add_option("record", replay_file, "Run record file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? kSuccess : kUsageError, out.str(), err.str(), {}};
    }

    const auto start = std::chrono::steady_clock::now();
    Output result;
    std::string command;
    Json inputs;
    try {
        if (mms_cmd->parsed()) {
            command = "mms";
            mms_opts.items = instance_items(mms_items, mms_items_opt->count() > 0, mms_file);
            const Pair p = parse_pair(mms_pair);
            mms_opts.l = p.l();
            mms_opts.d = p.d();
            inputs = to_ordered(nlohmann::json(mms_opts));
            result = run_mms(mms_opts);
        } else if (dom_cmd->parsed()) {
            command = "dominates";
            inputs = to_ordered(nlohmann::json(dom_opts));
            result = run_dominates(dom_opts);
        } else if (pairs_cmd->parsed()) {
            command = "pairs";
            inputs = to_ordered(nlohmann::json(pairs_opts));
            result = run_pairs(pairs_opts);
        } else if (audit_cmd->parsed()) {
            command = "audit";
            audit_opts.items = instance_items(audit_items, audit_items_opt->count() > 0, audit_file);
            if (audit_alloc.empty() == audit_alloc_file.empty())
                throw std::invalid_argument("give exactly one of --allocation or --allocation-file");
            audit_opts.allocation = parse_allocation(audit_alloc.empty() ? read_file(audit_alloc_file) : audit_alloc);
            if (!audit_criteria.empty()) {
                audit_opts.criteria.clear();
                std::stringstream ss(audit_criteria);
                for (std::string c; std::getline(ss, c, ',');) audit_opts.criteria.push_back(c);
            }
            inputs = to_ordered(nlohmann::json(audit_opts));
            result = run_audit(audit_opts);
        } else if (scan_cmd->parsed()) {
            command = "scan";
            inputs = to_ordered(nlohmann::json(scan_opts));
            result = run_scan(scan_opts);
        } else if (replay_cmd->parsed()) {
            return guarded([&] { return run_replay(read_file(replay_file)); });
        }
    } catch (const std::invalid_argument& e) {
        return {kUsageError, "", std::string("error: ") + e.what() + "\n", {}};
    }

    if (!record_path.empty()) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Json record{{"command", command},
                    {"inputs", inputs},
                    {"outputs", {{"exit_code", result.exit_code}, {"stdout", result.out}, {"files", result.files}}},
                    {"engine_version", kVersion},
                    {"wall_time_ms", ms}};
        result.files[record_path] = dump(record);
    }
    return result;
}

}  // namespace mmsfair::cli
