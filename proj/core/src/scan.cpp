#include "mmsfair/scan.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mmsfair {
namespace {

bool instance_less(const Instance& a, const Instance& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.items().begin(), a.items().end(), b.items().begin(), b.items().end());
}

template <typename T, typename F>
std::string joined(const std::vector<T>& xs, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += fmt(xs[i]);
    }
    return out;
}

}  // namespace

const char* name(Implication imp) noexcept {
    switch (imp) {
        case Implication::wmms_implies_omms: return "wmms_implies_omms";
        case Implication::omms_implies_wmms: return "omms_implies_wmms";
        case Implication::bmms_implies_wmms: return "bmms_implies_wmms";
        case Implication::bmms_implies_omms: return "bmms_implies_omms";
    }
    return "?";
}

bool ScanRow::holds_for_all(Implication imp) const {
    return std::all_of(holds.begin(), holds.end(),
                       [imp](const auto& h) { return h[static_cast<std::size_t>(imp)]; });
}

bool ScanRow::equal_entitlements() const {
    auto s = entitlements.shares();
    return std::all_of(s.begin(), s.end(), [&](const Rational& t) { return t == s.front(); });
}

bool ScanRow::criteria_coincide() const {
    for (std::size_t i = 0; i < omms.size(); ++i) {
        const Rational o = Rational::from_unsigned(omms[i]);
        if (o != wmms[i] || o != bmms[i]) return false;
    }
    return true;
}

std::string ScanReport::bmms_conjecture() const {
    const auto bw = failures[static_cast<std::size_t>(Implication::bmms_implies_wmms)];
    const auto bo = failures[static_cast<std::size_t>(Implication::bmms_implies_omms)];
    const std::string scale = std::to_string(rows.size()) + " rows (" + std::to_string(instances) +
                              " instances x " + std::to_string(vectors) + " entitlement vectors)";
    if (bw == 0 && bo == 0) return "no counterexample found at scale " + scale;
    return "counterexample found: BMMS fails to imply WMMS in " + std::to_string(bw) + " and OMMS in " +
           std::to_string(bo) + " of " + scale;
}

std::vector<EntitlementVector> entitlement_grid(std::size_t agents, std::uint64_t denominator) {
    std::vector<EntitlementVector> out;
    if (agents == 0 || denominator < agents) return out;
    const auto den = static_cast<std::int64_t>(denominator);
    std::vector<std::uint64_t> parts;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t left) {
        if (parts.size() + 1 == agents) {
            parts.push_back(left);
            std::vector<Rational> shares;
            for (auto p : parts) shares.emplace_back(static_cast<std::int64_t>(p), den);
            out.emplace_back(std::move(shares));
            parts.pop_back();
            return;
        }
        const std::uint64_t remaining_agents = agents - parts.size() - 1;
        for (std::uint64_t p = 1; p + remaining_agents <= left; ++p) {
            parts.push_back(p);
            rec(left - p);
            parts.pop_back();
        }
    };
    rec(denominator);
    return out;
}

std::vector<Instance> scan_instances(const ScanBounds& bounds) {
    if (bounds.value_step == 0) throw std::invalid_argument("value step must be positive");
    std::vector<Instance> out;
    if (bounds.max_items == 0) return out;
    const Value levels = bounds.max_value / bounds.value_step + 1;

    if (bounds.samples == 0) {
        std::vector<Value> current;
        std::function<void(std::size_t, Value)> rec = [&](std::size_t size, Value top) {
            if (current.size() == size) {
                out.emplace_back(current);
                return;
            }
            for (Value k = top + 1; k-- > 0;) {
                current.push_back(k * bounds.value_step);
                rec(size, k);
                current.pop_back();
            }
        };
        for (std::size_t size = 1; size <= bounds.max_items; ++size) rec(size, levels - 1);
    } else {
        // raw mt19937_64 output is fully specified, unlike the std distributions
        std::mt19937_64 rng(bounds.seed);
        std::set<std::vector<Value>> seen;
        for (std::size_t s = 0; s < bounds.samples; ++s) {
            const std::size_t size = 1 + static_cast<std::size_t>(rng() % bounds.max_items);
            std::vector<Value> items(size);
            for (auto& v : items) v = (rng() % levels) * bounds.value_step;
            std::sort(items.begin(), items.end(), std::greater<>{});
            seen.insert(std::move(items));
        }
        for (const auto& items : seen) out.emplace_back(items);
    }
    std::sort(out.begin(), out.end(), instance_less);
    return out;
}

ScanReport notion_separation_scan(const ScanBounds& bounds, const SearchLimits& limits) {
    ScanReport report;
    const auto instances = scan_instances(bounds);
    report.instances = instances.size();
    report.vectors = bounds.grid.size();

    for (const auto& inst : instances) {
        for (const auto& t : bounds.grid) {
            ScanRow row{inst, t, {}, {}, {}, {}};
            const Rational level = weighted_maximin(inst, t, limits).level;
            for (std::size_t i = 0; i < t.size(); ++i) {
                row.omms.push_back(omms_threshold(inst, t[i], limits));
                row.wmms.push_back(t[i] * level);
                row.bmms.push_back(bmms_value(inst, t[i], limits));
                const Rational o = Rational::from_unsigned(row.omms.back());
                const Rational& w = row.wmms.back();
                const Rational& b = row.bmms.back();
                row.holds.push_back({w >= o, o >= w, b >= w, b >= o});
            }
            const std::size_t index = report.rows.size();
            for (std::size_t k = 0; k < kImplicationCount; ++k) {
                if (row.holds_for_all(static_cast<Implication>(k))) continue;
                ++report.failures[k];
                if (!report.first_failure[k]) report.first_failure[k] = index;
            }
            if (row.equal_entitlements()) {
                ++report.equal_entitlement_rows;
                if (!row.criteria_coincide()) ++report.equal_entitlement_mismatches;
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "instance,entitlements,omms,wmms,bmms";
    for (std::size_t k = 0; k < kImplicationCount; ++k) out << ',' << name(static_cast<Implication>(k));
    out << '\n';
    auto str = [](const auto& x) { return x.to_string(); };
    for (const auto& row : report.rows) {
        out << joined(std::vector<Value>(row.instance.items().begin(), row.instance.items().end()),
                      [](Value v) { return std::to_string(v); })
            << ',' << joined(std::vector<Rational>(row.entitlements.shares().begin(), row.entitlements.shares().end()), str)
            << ',' << joined(row.omms, [](Value v) { return std::to_string(v); }) << ',' << joined(row.wmms, str)
            << ',' << joined(row.bmms, str);
        for (std::size_t k = 0; k < kImplicationCount; ++k) {
            out << ',';
            for (std::size_t i = 0; i < row.holds.size(); ++i) out << (i ? " " : "") << (row.holds[i][k] ? 1 : 0);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mmsfair
