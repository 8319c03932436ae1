#include "mmsfair/fairness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmsfair {
namespace {

class WeightedSearch {
public:
    WeightedSearch(std::vector<Value> items, const EntitlementVector& t)
        : items_(std::move(items)), n_(t.size()), sums_(n_, 0), count_(n_, 0), assign_(items_.size(), 0),
          suffix_(items_.size() + 1, 0), prev_same_(n_, -1) {
        for (std::size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
        for (std::size_t j = 0; j < n_; ++j) {
            share_.push_back(t[j]);
            inverse_.push_back(Rational(1) / t[j]);
            for (std::size_t k = j; k-- > 0;) {
                if (t[k] == t[j]) {
                    prev_same_[j] = static_cast<int>(k);
                    break;
                }
            }
        }
        order_.resize(n_);
    }

    void run() {
        ceiling_ = upper_bound(0);
        descend(0);
    }

    const Rational& best() const { return best_; }
    const std::vector<std::uint32_t>& best_assignment() const { return best_assign_; }

private:
    Rational ratio(std::size_t j) const { return Rational::from_unsigned(sums_[j]) * inverse_[j]; }

    // Highest common level min_j (c_j + x_j) / t_j reachable by splitting the
    // remaining value fractionally.
    Rational upper_bound(std::size_t next) {
        ratios_.clear();
        for (std::size_t j = 0; j < n_; ++j) ratios_.push_back(ratio(j));
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return ratios_[a] < ratios_[b]; });
        Rational mass = Rational::from_unsigned(suffix_[next]);
        Rational weight;
        Rational level;
        for (std::size_t k = 0; k < n_; ++k) {
            mass += Rational::from_unsigned(sums_[order_[k]]);
            weight += share_[order_[k]];
            level = mass / weight;
            if (k + 1 == n_ || level <= ratios_[order_[k + 1]]) break;
        }
        return level;
    }

    Rational leaf_value() const {
        Rational v = ratio(0);
        for (std::size_t j = 1; j < n_; ++j) v = std::min(v, ratio(j));
        return v;
    }

    void descend(std::size_t i) {
        if (done_) return;
        if (i == items_.size()) {
            Rational v = leaf_value();
            if (!found_ || v > best_) {
                found_ = true;
                best_ = v;
                best_assign_ = assign_;
                done_ = best_ >= ceiling_;
            }
            return;
        }
        if (found_ && upper_bound(i) <= best_) return;

        const std::size_t first = (i > 0 && items_[i] == items_[i - 1]) ? assign_[i - 1] : 0;
        for (std::size_t k = first; k < n_ && !done_; ++k) {
            if (count_[k] == 0 && prev_same_[k] >= 0 && count_[static_cast<std::size_t>(prev_same_[k])] == 0)
                continue;
            assign_[i] = static_cast<std::uint32_t>(k);
            sums_[k] += items_[i];
            ++count_[k];
            descend(i + 1);
            --count_[k];
            sums_[k] -= items_[i];
        }
    }

    std::vector<Value> items_;
    std::size_t n_;
    std::vector<Value> sums_;
    std::vector<std::size_t> count_;
    std::vector<std::uint32_t> assign_;
    std::vector<Value> suffix_;
    std::vector<int> prev_same_;
    std::vector<Rational> share_;
    std::vector<Rational> inverse_;
    std::vector<Rational> ratios_;
    std::vector<std::size_t> order_;

    bool found_ = false;
    bool done_ = false;
    Rational best_;
    Rational ceiling_;
    std::vector<std::uint32_t> best_assign_;
};

void check_entitlement(const Rational& a) {
    if (a <= Rational(0) || a > Rational(1))
        throw std::invalid_argument("entitlement must satisfy 0 < a <= 1, got " + a.to_string());
}

}  // namespace

void Allocation::validate(std::size_t items) const {
    std::vector<bool> seen(items, false);
    std::size_t covered = 0;
    for (const auto& bundle : bundles) {
        for (std::size_t idx : bundle) {
            if (idx >= items)
                throw std::invalid_argument("allocation references item " + std::to_string(idx) + " of " +
                                            std::to_string(items));
            if (seen[idx]) throw std::invalid_argument("item " + std::to_string(idx) + " allocated twice");
            seen[idx] = true;
            ++covered;
        }
    }
    if (covered != items)
        throw std::invalid_argument("allocation covers " + std::to_string(covered) + " of " +
                                    std::to_string(items) + " items");
}

Value Allocation::bundle_value(const Instance& instance, std::size_t agent) const {
    Value v = 0;
    for (std::size_t idx : bundles.at(agent)) v += instance[idx];
    return v;
}

std::vector<Requirement> omms_requirements(const Instance& instance, const Rational& a,
                                           const SearchLimits& limits) {
    check_entitlement(a);
    std::vector<Requirement> out;
    if (instance.empty()) return out;
    for (Pair p : non_dominated_pairs(a, instance.size()).pairs) out.push_back({p, mms(instance, p, limits).value});
    return out;
}

Value omms_threshold(const Instance& instance, const Rational& a, const SearchLimits& limits) {
    Value best = 0;
    for (const auto& req : omms_requirements(instance, a, limits)) best = std::max(best, req.value);
    return best;
}

bool is_omms_fair(const Instance& instance, const Rational& a, Value bundle_value, const SearchLimits& limits) {
    return bundle_value >= omms_threshold(instance, a, limits);
}

WeightedMaximin weighted_maximin(const Instance& instance, const EntitlementVector& t, const SearchLimits& limits) {
    const std::size_t m = instance.size();
    check_limits(m, static_cast<std::uint32_t>(std::min<std::size_t>(t.size(), UINT32_MAX)), limits);
    Rational::from_unsigned(instance.total());

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return instance[a] > instance[b]; });
    std::vector<Value> sorted(m);
    for (std::size_t i = 0; i < m; ++i) sorted[i] = instance[order[i]];

    WeightedSearch search(std::move(sorted), t);
    search.run();

    WeightedMaximin out{search.best(), {std::vector<std::uint32_t>(m, 0), static_cast<std::uint32_t>(t.size())}};
    for (std::size_t i = 0; i < m; ++i) out.witness.part_of[order[i]] = search.best_assignment()[i];
    return out;
}

Rational wmms_value(const Instance& instance, const EntitlementVector& t, std::size_t agent,
                    const SearchLimits& limits) {
    if (agent >= t.size()) throw std::invalid_argument("agent index out of range");
    return t[agent] * weighted_maximin(instance, t, limits).level;
}

Rational bmms_value(const Instance& instance, const Rational& t_i, const SearchLimits& limits) {
    check_entitlement(t_i);
    check_limits(instance.size(), 2, limits);
    const Rational total = Rational::from_unsigned(instance.total());
    if (t_i == Rational(1)) return total;

    std::vector<Value> reachable{0};
    for (Value v : instance.items()) {
        std::vector<Value> shifted(reachable.size());
        std::transform(reachable.begin(), reachable.end(), shifted.begin(), [v](Value s) { return s + v; });
        std::vector<Value> merged;
        merged.reserve(reachable.size() * 2);
        std::merge(reachable.begin(), reachable.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        reachable = std::move(merged);
    }

    const Rational others = t_i / (Rational(1) - t_i);
    Rational best;
    for (Value s : reachable) {
        const Rational own = Rational::from_unsigned(s);
        best = std::max(best, std::min(own, others * (total - own)));
    }
    return best;
}

bool AgentReport::ok() const {
    return (!omms || omms->ok) && (!wmms || wmms->ok) && (!bmms || bmms->ok);
}

bool FairnessReport::ok() const {
    return std::all_of(agents.begin(), agents.end(), [](const AgentReport& a) { return a.ok(); });
}

FairnessReport audit(const Instance& instance, const EntitlementVector& t, const Allocation& alloc,
                     const Criteria& criteria, const SearchLimits& limits) {
    if (alloc.bundles.size() != t.size())
        throw std::invalid_argument("allocation has " + std::to_string(alloc.bundles.size()) + " bundles for " +
                                    std::to_string(t.size()) + " agents");
    alloc.validate(instance.size());

    std::optional<Rational> level;
    if (criteria.wmms) level = weighted_maximin(instance, t, limits).level;

    FairnessReport report;
    for (std::size_t i = 0; i < t.size(); ++i) {
        AgentReport agent;
        agent.entitlement = t[i];
        agent.bundle_value = alloc.bundle_value(instance, i);
        const Rational have = Rational::from_unsigned(agent.bundle_value);
        if (criteria.omms) {
            OmmsVerdict v{omms_requirements(instance, t[i], limits), true};
            for (const auto& req : v.requirements) v.ok = v.ok && agent.bundle_value >= req.value;
            agent.omms = std::move(v);
        }
        if (criteria.wmms) {
            Rational w = t[i] * *level;
            agent.wmms = ValueVerdict{w, have >= w};
        }
        if (criteria.bmms) {
            Rational b = bmms_value(instance, t[i], limits);
            agent.bmms = ValueVerdict{b, have >= b};
        }
        report.agents.push_back(std::move(agent));
    }
    return report;
}

}  // namespace mmsfair
