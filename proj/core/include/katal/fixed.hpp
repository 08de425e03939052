#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace katal {

// Fixed-point decimal: a signed 128-bit integer scaled by 10^18.
// All money, shares and rates in the state use this type; there is no
// floating point anywhere in consensus-relevant code.
class Fixed {
public:
    using rep = __int128;
    static constexpr int64_t kScale = 1'000'000'000'000'000'000LL;  // 10^18

    constexpr Fixed() : raw_(0) {}
    constexpr explicit Fixed(int64_t whole) : raw_(static_cast<rep>(whole) * kScale) {}

    static constexpr Fixed from_raw(rep raw) {
        Fixed f;
        f.raw_ = raw;
        return f;
    }
    constexpr rep raw() const { return raw_; }

    static constexpr Fixed one() { return Fixed(1); }
    static constexpr Fixed zero() { return Fixed(); }

    // Parses "123", "-0.5", "1.000000000000000001". More than 18 fractional
    // digits is an error, as is any other malformed input.
    static Fixed parse(const std::string& text);

    // Canonical decimal rendering: minus sign, integer part, fractional part
    // with trailing zeros removed ("1", "-0.5", "33.333333333333333334").
    std::string to_string() const;

    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool is_negative() const { return raw_ < 0; }
    constexpr bool is_whole() const { return raw_ % kScale == 0; }

    Fixed abs() const { return raw_ < 0 ? Fixed::from_raw(-raw_) : *this; }

    friend constexpr Fixed operator+(Fixed a, Fixed b) { return from_raw(a.raw_ + b.raw_); }
    friend constexpr Fixed operator-(Fixed a, Fixed b) { return from_raw(a.raw_ - b.raw_); }
    friend constexpr Fixed operator-(Fixed a) { return from_raw(-a.raw_); }
    Fixed& operator+=(Fixed o) { raw_ += o.raw_; return *this; }
    Fixed& operator-=(Fixed o) { raw_ -= o.raw_; return *this; }

    friend constexpr bool operator==(Fixed a, Fixed b) { return a.raw_ == b.raw_; }
    friend constexpr std::strong_ordering operator<=>(Fixed a, Fixed b) {
        if (a.raw_ < b.raw_) return std::strong_ordering::less;
        if (a.raw_ > b.raw_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Rounded multiply/divide through a 256-bit intermediate.
    // Rounding is half away from zero.
    static Fixed mul(Fixed a, Fixed b);
    static Fixed div(Fixed a, Fixed b);  // throws BadAmount on division by zero

private:
    rep raw_;
};

// Splits `total` across `weights` proportionally, in base units of 10^-18,
// using largest-remainder rounding. Entries must be pre-sorted by key;
// remainder units go to earlier keys first. The result sums to `total`
// exactly. Weights must be non-negative with a positive sum.
std::vector<std::pair<std::string, Fixed>> largest_remainder_split(
    Fixed total, const std::vector<std::pair<std::string, Fixed>>& weights);

}  // namespace katal
