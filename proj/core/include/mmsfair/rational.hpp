#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mmsfair {

/// Exact fraction stored in lowest terms with a positive denominator.
///
/// Intermediate products are widened to 128 bits; a result whose reduced
/// form does not fit in 64 bits throws std::overflow_error rather than
/// wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t num) noexcept : num_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Lifts a non-negative item value; throws if it exceeds int64 range.
    static Rational from_unsigned(std::uint64_t value);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    /// Largest integer not above the value.
    std::int64_t floor() const noexcept;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

private:
    struct Reduced {};
    constexpr Rational(std::int64_t num, std::int64_t den, Reduced) noexcept : num_(num), den_(den) {}
    friend Rational make_reduced(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses "p/q", an integer, or a decimal such as "0.74" (read as 74/100).
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Largest integer l with l/d <= a, for 0 < a <= 1 and d >= 1.
std::uint64_t rational_floor_mul(const Rational& a, std::uint64_t d);

}  // namespace mmsfair
