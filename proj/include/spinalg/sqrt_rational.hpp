// spinalg: exact sign * sqrt(p/q) values, the natural codomain of Wigner symbols.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace spinalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Exact value of the form sign * sqrt(radicand), radicand a nonnegative
/// rational kept in lowest terms. Closed under multiplication; any rational
/// embeds as sign(v) * sqrt(v^2). Equality is exact.
class SqrtRational {
public:
    SqrtRational() = default; // zero

    static SqrtRational sqrt_of(const BigRational& radicand) {
        if (radicand < 0)
            throw std::domain_error("SqrtRational: negative radicand");
        SqrtRational r;
        r.sign_ = radicand == 0 ? 0 : 1;
        r.radicand_ = radicand;
        return r;
    }

    static SqrtRational of_rational(const BigRational& value) {
        SqrtRational r;
        if (value == 0) return r;
        r.sign_ = value < 0 ? -1 : 1;
        r.radicand_ = value * value;
        return r;
    }

    int sign() const { return sign_; }
    const BigRational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        SqrtRational r;
        r.sign_ = a.sign_ * b.sign_;
        if (r.sign_ != 0) r.radicand_ = a.radicand_ * b.radicand_;
        return r;
    }
    SqrtRational& operator*=(const SqrtRational& b) { return *this = *this * b; }

    SqrtRational operator-() const {
        SqrtRational r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend bool operator==(const SqrtRational&, const SqrtRational&) = default;

    /// High-precision square root, rounded to double once at the end.
    double to_double() const {
        if (sign_ == 0) return 0.0;
        HighFloat num(boost::multiprecision::numerator(radicand_));
        HighFloat den(boost::multiprecision::denominator(radicand_));
        HighFloat root = sqrt(num / den);
        return sign_ * root.convert_to<double>();
    }

    /// "0", "+sqrt(1/6)", "-sqrt(3)".
    std::string str() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-sqrt(" : "+sqrt(";
        s += boost::multiprecision::numerator(radicand_).str();
        if (boost::multiprecision::denominator(radicand_) != 1) {
            s += '/';
            s += boost::multiprecision::denominator(radicand_).str();
        }
        s += ')';
        return s;
    }

private:
    int sign_ = 0;
    BigRational radicand_ = 0;
};

/// Decimal with 17 significant digits, enough to round-trip a double.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace spinalg
