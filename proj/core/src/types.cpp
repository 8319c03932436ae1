#include "mmsfair/types.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

namespace mmsfair {

Instance::Instance(std::vector<Value> items) : items_(std::move(items)) {
    for (Value v : items_) {
        if (v > std::numeric_limits<Value>::max() - total_)
            throw std::overflow_error("instance total exceeds 64-bit range");
        total_ += v;
    }
}

Instance Instance::units(std::size_t m) { return Instance(std::vector<Value>(m, 1)); }

Instance canonicalize(const Instance& instance) {
    std::vector<Value> items(instance.items().begin(), instance.items().end());
    std::sort(items.begin(), items.end(), std::greater<>{});
    return Instance(std::move(items));
}

Instance parse_instance(std::string_view text) {
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        auto last = text.find_last_not_of(" \t\r\n");
        if (text[last] != ']') throw std::invalid_argument("unterminated JSON array in instance");
        text = text.substr(first + 1, last - first - 1);
    }

    std::vector<Value> items;
    std::size_t i = 0;
    bool expect_item = false;
    while (i < text.size()) {
        if (is_sep(text[i])) {
            if (text[i] == ',') {
                if (expect_item || items.empty()) throw std::invalid_argument("empty entry in instance");
                expect_item = true;
            }
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view tok = text.substr(i, j - i);
        Value v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec == std::errc::result_out_of_range)
            throw std::invalid_argument("item value out of range: '" + std::string(tok) + "'");
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("item is not a non-negative integer: '" + std::string(tok) + "'");
        items.push_back(v);
        expect_item = false;
        i = j;
    }
    if (expect_item) throw std::invalid_argument("trailing comma in instance");
    try {
        return Instance(std::move(items));
    } catch (const std::overflow_error& e) {
        throw std::invalid_argument(e.what());
    }
}

std::string to_string(const Instance& instance) {
    std::string out = "[";
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(instance[i]);
    }
    return out + "]";
}

Pair::Pair(std::uint32_t l, std::uint32_t d) : l_(l), d_(d) {
    if (d == 0) throw std::invalid_argument("pair needs d >= 1");
    if (l > d) throw std::invalid_argument("pair needs l <= d, got " + std::to_string(l) + "/" + std::to_string(d));
}

std::string Pair::to_string() const { return std::to_string(l_) + "/" + std::to_string(d_); }

Pair parse_pair(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("pair must be written l/d: '" + std::string(text) + "'");
    auto num = [&](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("malformed pair: '" + std::string(text) + "'");
        return v;
    };
    return Pair(num(text.substr(0, slash)), num(text.substr(slash + 1)));
}

std::vector<Value> PartitionAssignment::part_sums(const Instance& instance) const {
    if (part_of.size() != instance.size()) throw std::invalid_argument("assignment length differs from instance size");
    std::vector<Value> sums(parts, 0);
    for (std::size_t i = 0; i < part_of.size(); ++i) sums.at(part_of[i]) += instance[i];
    return sums;
}

std::vector<std::vector<std::size_t>> PartitionAssignment::groups() const {
    std::vector<std::vector<std::size_t>> out(parts);
    for (std::size_t i = 0; i < part_of.size(); ++i) out.at(part_of[i]).push_back(i);
    return out;
}

EntitlementVector::EntitlementVector(std::vector<Rational> shares) : shares_(std::move(shares)) {
    if (shares_.empty()) throw std::invalid_argument("entitlement vector is empty");
    Rational sum;
    for (const auto& t : shares_) {
        if (t <= Rational(0)) throw std::invalid_argument("entitlement " + t.to_string() + " is not positive");
        sum += t;
    }
    if (sum != Rational(1)) throw std::invalid_argument("entitlements sum to " + sum.to_string() + ", not 1");
}

EntitlementVector EntitlementVector::equal(std::size_t n) {
    if (n == 0) throw std::invalid_argument("entitlement vector is empty");
    return EntitlementVector(std::vector<Rational>(n, Rational(1, static_cast<std::int64_t>(n))));
}

EntitlementVector parse_entitlements(std::string_view text) {
    std::vector<Rational> shares;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        shares.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return EntitlementVector(std::move(shares));
}

std::string to_string(const EntitlementVector& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].to_string();
    }
    return out;
}

}  // namespace mmsfair
