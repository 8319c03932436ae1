#include "mmsfair/mms.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace mmsfair {
namespace {

using u128 = unsigned __int128;

class PartitionSearch {
public:
    PartitionSearch(std::vector<Value> items, std::uint32_t l, std::uint32_t d)
        : items_(std::move(items)), l_(l), d_(d), sums_(d, 0), assign_(items_.size(), 0),
          suffix_(items_.size() + 1, 0) {
        for (std::size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
    }

    void run() {
        ceiling_ = upper_bound(0);
        descend(0);
    }

    Value best() const { return best_; }
    const std::vector<std::uint32_t>& best_assignment() const { return best_assign_; }

private:
    // Largest achievable sum of the l smallest parts if the remaining value
    // could be split fractionally: pour it into the lowest parts first.
    Value upper_bound(std::size_t next) {
        scratch_.assign(sums_.begin(), sums_.end());
        std::sort(scratch_.begin(), scratch_.end());
        const u128 rest = suffix_[next];
        u128 prefix = 0;
        std::size_t raised = 1;
        for (; raised <= d_; ++raised) {
            prefix += scratch_[raised - 1];
            if (raised == d_) break;
            // level (rest + prefix) / raised must not exceed the next part
            if (rest + prefix <= static_cast<u128>(scratch_[raised]) * raised) break;
        }
        if (l_ <= raised) return static_cast<Value>(static_cast<u128>(l_) * (rest + prefix) / raised);
        u128 total = rest + prefix;
        for (std::size_t j = raised; j < l_; ++j) total += scratch_[j];
        return static_cast<Value>(total);
    }

    void descend(std::size_t i) {
        if (done_) return;
        if (i == items_.size()) {
            Value v = min_l_union(sums_, l_);
            if (!found_ || v > best_) {
                found_ = true;
                best_ = v;
                best_assign_ = assign_;
                done_ = best_ >= ceiling_;
            }
            return;
        }
        if (found_ && upper_bound(i) <= best_) return;

        const std::uint32_t limit = std::min(opened_ + 1, d_);
        const std::uint32_t first = (i > 0 && items_[i] == items_[i - 1]) ? assign_[i - 1] : 0;
        for (std::uint32_t k = first; k < limit && !done_; ++k) {
            const std::uint32_t opened_before = opened_;
            if (k == opened_) ++opened_;
            assign_[i] = k;
            sums_[k] += items_[i];
            descend(i + 1);
            sums_[k] -= items_[i];
            opened_ = opened_before;
        }
    }

    std::vector<Value> items_;
    std::uint32_t l_;
    std::uint32_t d_;
    std::vector<Value> sums_;
    std::vector<std::uint32_t> assign_;
    std::vector<Value> suffix_;
    std::vector<Value> scratch_;
    std::uint32_t opened_ = 0;

    bool found_ = false;
    bool done_ = false;
    Value best_ = 0;
    Value ceiling_ = 0;
    std::vector<std::uint32_t> best_assign_;
};

}  // namespace

void check_limits(std::size_t items, std::uint32_t parts, const SearchLimits& limits) {
    if (items > limits.max_items || parts > limits.max_parts)
        throw InstanceTooLarge("instance too large: " + std::to_string(items) + " items into " +
                               std::to_string(parts) + " parts exceeds limit of " +
                               std::to_string(limits.max_items) + " items / " +
                               std::to_string(limits.max_parts) + " parts");
}

Value min_l_union(std::span<const Value> part_sums, std::size_t l) {
    if (l > part_sums.size())
        throw std::invalid_argument("l = " + std::to_string(l) + " exceeds number of parts " +
                                    std::to_string(part_sums.size()));
    if (l == 0) return 0;
    if (l == part_sums.size()) return std::accumulate(part_sums.begin(), part_sums.end(), Value{0});
    std::vector<Value> sorted(part_sums.begin(), part_sums.end());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(l - 1), sorted.end());
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(l));
    return std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(l), Value{0});
}

MmsResult mms(const Instance& instance, Pair pair, const SearchLimits& limits) {
    const std::size_t m = instance.size();
    MmsResult result;
    result.witness.parts = pair.d();
    result.witness.part_of.assign(m, 0);

    if (pair.l() == 0) return result;
    if (pair.l() == pair.d()) {
        result.value = instance.total();
        return result;
    }
    check_limits(m, pair.d(), limits);

    // Stable order: ties keep their input order so the witness mapping is
    // deterministic.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return instance[a] > instance[b]; });
    std::vector<Value> sorted(m);
    for (std::size_t i = 0; i < m; ++i) sorted[i] = instance[order[i]];

    PartitionSearch search(std::move(sorted), pair.l(), pair.d());
    search.run();

    result.value = search.best();
    const auto& assign = search.best_assignment();
    for (std::size_t i = 0; i < m; ++i) result.witness.part_of[order[i]] = assign[i];
    return result;
}

std::uint64_t mms_cardinality(std::uint64_t m, Pair pair) {
    if (m == 0 || pair.l() == 0) return 0;
    const std::uint64_t d = pair.d();
    const std::uint64_t l = pair.l();
    const std::uint64_t q = (m + d - 1) / d;
    const std::uint64_t r = q * d - m;
    return q * l - std::min(l, r);
}

}  // namespace mmsfair
