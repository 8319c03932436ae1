#include "mmsfair/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mmsfair {

Value brute_force_mms(const Instance& instance, Pair pair) {
    const std::size_t m = instance.size();
    const std::uint32_t d = pair.d();
    if (m > 10 || d > 6) throw std::invalid_argument("brute_force_mms is limited to 10 items and 6 parts");

    std::vector<std::uint32_t> digits(m, 0);
    std::vector<Value> sums(d);
    Value best = 0;
    for (;;) {
        std::fill(sums.begin(), sums.end(), Value{0});
        for (std::size_t i = 0; i < m; ++i) sums[digits[i]] += instance[i];
        std::sort(sums.begin(), sums.end());
        Value worst = 0;
        for (std::uint32_t j = 0; j < pair.l(); ++j) worst += sums[j];
        best = std::max(best, worst);

        // odometer increment in base d
        std::size_t pos = 0;
        while (pos < m && ++digits[pos] == d) digits[pos++] = 0;
        if (pos == m) break;
    }
    return best;
}

}  // namespace mmsfair
