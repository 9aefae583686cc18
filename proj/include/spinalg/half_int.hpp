// spinalg: exact half-integer quantum numbers.
#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spinalg {

/// Half-integer value (spin, rank, projection), stored as twice its value so
/// that arithmetic stays exact. 3/2 is stored as twice = 3.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    /// Parses "2", "3/2", "-1/2", "1.5", "0.5", "-2.0".
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    constexpr int to_int() const {
        if (!is_integer())
            throw std::domain_error("HalfInt: " + str_impl(twice_) + " is not an integer");
        return twice_ / 2;
    }

    constexpr double value() const { return twice_ / 2.0; }

    /// Canonical text form: "2" or "3/2".
    std::string str() const { return str_impl(twice_); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt b) { twice_ += b.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt b) { twice_ -= b.twice_; return *this; }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    static std::string str_impl(int twice) {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt a) { return a.is_negative() ? -a : a; }

inline HalfInt HalfInt::parse(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("HalfInt: cannot parse \"" + std::string(text) + "\"");
    };
    std::string_view s = text;
    int sign = 1;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') sign = -1;
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    const auto digits_value = [&](std::string_view d) -> long {
        if (d.empty()) fail();
        long v = 0;
        for (char c : d) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
            if (v > 1'000'000) fail();
        }
        return v;
    };

    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        long num = digits_value(s.substr(0, pos));
        long den = digits_value(s.substr(pos + 1));
        if (den == 1) return from_twice(static_cast<int>(sign * 2 * num));
        if (den == 2) return from_twice(static_cast<int>(sign * num));
        fail();
    }
    if (auto pos = s.find('.'); pos != std::string_view::npos) {
        long whole = digits_value(s.substr(0, pos));
        std::string_view frac = s.substr(pos + 1);
        if (frac.empty()) fail();
        // exactly .0 or .5, trailing zeros allowed
        bool half = false;
        if (frac.front() == '5') {
            half = true;
            frac.remove_prefix(1);
        }
        for (char c : frac)
            if (c != '0') fail();
        return from_twice(static_cast<int>(sign * (2 * whole + (half ? 1 : 0))));
    }
    return from_twice(static_cast<int>(sign * 2 * digits_value(s)));
}

} // namespace spinalg
