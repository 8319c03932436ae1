#include "mmsfair/pairs.hpp"

#include <limits>
#include <stdexcept>

namespace mmsfair {
namespace {

// strict "x is preferred over y" among candidates
bool beats(Pair x, Pair y) {
    if (!dominates(x, y)) return false;
    return !dominates(y, x) || x.d() < y.d();
}

std::vector<bool> survivor_mask(const std::vector<Pair>& cands) {
    std::vector<bool> keep(cands.size(), true);
    for (std::size_t j = 0; j < cands.size(); ++j)
        for (std::size_t i = 0; i < cands.size() && keep[j]; ++i)
            if (i != j && beats(cands[i], cands[j])) keep[j] = false;
    return keep;
}

}  // namespace

std::string Removal::to_string() const {
    return removed.to_string() + " is filtered out by " + by.to_string() + " (with q=" +
           std::to_string(decomposition.q) + ", r=" + std::to_string(decomposition.r) + ")";
}

std::vector<Pair> candidate_pairs(const Rational& a, std::size_t m) {
    if (m == 0) throw std::invalid_argument("item count must be at least 1");
    if (m > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("item count too large");
    std::vector<Pair> out;
    out.reserve(m);
    for (std::size_t d = 1; d <= m; ++d)
        out.emplace_back(static_cast<std::uint32_t>(rational_floor_mul(a, d)), static_cast<std::uint32_t>(d));
    return out;
}

PairSet non_dominated_pairs(const Rational& a, std::size_t m) {
    const auto cands = candidate_pairs(a, m);
    const auto keep = survivor_mask(cands);
    PairSet out{{}, a, m};
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (keep[i]) out.pairs.push_back(cands[i]);
    return out;
}

std::vector<Removal> filtration_trace(const Rational& a, std::size_t m) {
    const auto cands = candidate_pairs(a, m);
    const auto keep = survivor_mask(cands);
    std::vector<Removal> trace;
    for (std::size_t j = 0; j < cands.size(); ++j) {
        if (keep[j]) continue;
        const Pair* chosen = nullptr;
        bool chosen_direct = false;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (!keep[i] || !dominates(cands[i], cands[j])) continue;
            const bool direct = corollary_case(cands[i], cands[j]).has_value();
            if (chosen == nullptr || (direct && !chosen_direct)) {
                chosen = &cands[i];
                chosen_direct = direct;
            }
        }
        if (chosen == nullptr) throw std::logic_error("removed candidate has no surviving dominator");
        trace.push_back({cands[j], *chosen, decompose(chosen->d(), cands[j].d())});
    }
    return trace;
}

}  // namespace mmsfair
