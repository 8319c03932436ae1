#include "mmsfair/dominance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmsfair {

Decomposition decompose(std::uint64_t d, std::uint64_t d_prime) {
    if (d == 0 || d_prime == 0) throw std::invalid_argument("decompose needs positive d and d'");
    const std::uint64_t q = (d_prime + d - 1) / d;
    return {q, q * d - d_prime};
}

std::uint64_t guaranteed_count(Pair p, std::uint32_t d_prime) {
    const auto [q, r] = decompose(p.d(), d_prime);
    const std::uint64_t l = p.l();
    return q * l - std::min(l, r);
}

bool dominates(Pair p, Pair p_prime) { return guaranteed_count(p, p_prime.d()) >= p_prime.l(); }

char label(CorollaryCase c) noexcept {
    switch (c) {
        case CorollaryCase::a: return 'a';
        case CorollaryCase::b: return 'b';
        case CorollaryCase::c: return 'c';
        case CorollaryCase::d: return 'd';
    }
    return '?';
}

std::optional<CorollaryCase> corollary_case(Pair p, Pair p_prime) {
    const std::uint32_t l = p.l(), d = p.d(), l2 = p_prime.l(), d2 = p_prime.d();
    if (l > l2 && d == d2) return CorollaryCase::a;
    if (l == l2 && d < d2) return CorollaryCase::b;
    if (l > l2 && d > d2 && l - l2 == d - d2) return CorollaryCase::c;
    if (std::gcd(l, d) == 1 && d2 % d == 0 && d2 / d >= 2 && static_cast<std::uint64_t>(l) * (d2 / d) == l2)
        return CorollaryCase::d;
    return std::nullopt;
}

Instance non_dominance_witness(Pair p, Pair p_prime) {
    if (dominates(p, p_prime))
        throw std::invalid_argument("no counterexample exists: " + p.to_string() + " dominates " +
                                    p_prime.to_string());
    return Instance::units(p_prime.d());
}

bool bundle_size_reduction_applies(Pair p, Pair p_prime, std::size_t m) {
    if (m > p.d()) return false;
    if (p_prime.l() < p.l() || p_prime.d() < p.d()) return false;
    return p_prime.l() - p.l() == p_prime.d() - p.d();
}

}  // namespace mmsfair
