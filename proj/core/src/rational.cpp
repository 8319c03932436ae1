#include "mmsfair/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace mmsfair {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) noexcept {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 x) noexcept { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

std::int64_t narrow(i128 x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow: result exceeds 64-bit range");
    return static_cast<std::int64_t>(x);
}

}  // namespace

Rational make_reduced(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational{};
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
    return Rational{narrow(num), narrow(den), Rational::Reduced{}};
}

namespace {

std::uint64_t parse_digits(std::string_view digits, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw std::invalid_argument("number out of range: '" + std::string(whole) + "'");
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = make_reduced(num, den);
}

Rational Rational::from_unsigned(std::uint64_t value) {
    if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("value too large for rational arithmetic");
    return Rational(static_cast<std::int64_t>(value));
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::operator-() const { return make_reduced(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return make_reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("empty rational");

    i128 num = 0;
    i128 den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = parse_digits(trim(text.substr(0, slash)), whole);
        den = parse_digits(trim(text.substr(slash + 1)), whole);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        if (frac_part.size() > 18)
            throw std::invalid_argument("too many decimal digits: '" + std::string(whole) + "'");
        num = int_part.empty() ? 0 : parse_digits(int_part, whole);
        for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        num *= den;
        if (!frac_part.empty()) num += parse_digits(frac_part, whole);
    } else {
        num = parse_digits(text, whole);
    }
    try {
        return make_reduced(negative ? -num : num, den);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("rational out of range: '" + std::string(whole) + "'");
    }
}

std::uint64_t rational_floor_mul(const Rational& a, std::uint64_t d) {
    if (a <= Rational(0) || a > Rational(1))
        throw std::invalid_argument("entitlement must satisfy 0 < a <= 1, got " + a.to_string());
    if (d == 0) throw std::invalid_argument("d must be positive");
    u128 prod = static_cast<u128>(a.num()) * d;
    return static_cast<std::uint64_t>(prod / static_cast<u128>(a.den()));
}

}  // namespace mmsfair
