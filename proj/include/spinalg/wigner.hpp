// spinalg: exact Wigner 3jm and 6j symbols via the Racah single-sum formulas.
//
// All factorial products are accumulated in arbitrary-precision rationals, so
// the returned values are exact (sign * sqrt(rational)) with no cancellation
// loss. See e.g. DLMF §34.2 and §34.4 for the formulas.
#pragma once

#include "half_int.hpp"
#include "sqrt_rational.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace spinalg {

/// Memoized arbitrary-precision factorial. Safe for concurrent callers: the
/// table only grows, and deque growth never moves existing elements.
inline const BigInt& factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::deque<BigInt> table{BigInt(1), BigInt(1)};
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        if (n < static_cast<int>(table.size())) return table[n];
    }
    std::unique_lock lock(mutex);
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() * static_cast<int>(table.size()));
    return table[n];
}

/// True iff |j1-j2| <= j3 <= j1+j2 and j1+j2+j3 is an integer.
/// All arguments must be >= 0.
inline bool triangle_satisfied(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (!(j1 + j2 + j3).is_integer()) return false;
    return abs(j1 - j2) <= j3 && j3 <= j1 + j2;
}

namespace detail {

// (x+y-z)! (x-y+z)! (-x+y+z)! / (x+y+z+1)!, the squared triangle coefficient.
// Requires triangle_satisfied(x, y, z).
inline BigRational triangle_factor_sq(HalfInt x, HalfInt y, HalfInt z) {
    const int a = (x + y - z).to_int();
    const int b = (x - y + z).to_int();
    const int c = ((-x) + y + z).to_int();
    BigInt num = factorial(a) * factorial(b) * factorial(c);
    return BigRational(num, factorial(a + b + c + 1));
}

inline bool odd(int n) { return n % 2 != 0; }

} // namespace detail

/// Exact Wigner 3jm symbol (j1 j2 j3; m1 m2 m3).
///
/// Returns zero when m1+m2+m3 != 0 or the triangle rule fails; throws
/// std::domain_error when some |mi| > ji or ji-mi is not an integer, since
/// such arguments indicate an indexing bug rather than a selection rule.
inline SqrtRational three_jm(HalfInt j1, HalfInt j2, HalfInt j3,
                             HalfInt m1, HalfInt m2, HalfInt m3) {
    const auto check = [](HalfInt j, HalfInt m, const char* which) {
        if (abs(m) > j || !(j - m).is_integer())
            throw std::domain_error(std::string("three_jm: invalid (j,m) pair ") + which +
                                    ": j=" + j.str() + ", m=" + m.str());
    };
    check(j1, m1, "1");
    check(j2, m2, "2");
    check(j3, m3, "3");

    if ((m1 + m2 + m3).twice() != 0) return {};
    if (!triangle_satisfied(j1, j2, j3)) return {};

    // Integer combinations; integrality is guaranteed by the checks above.
    const int jjj = (j1 + j2 - j3).to_int();
    const int j1mm = (j1 - m1).to_int();
    const int j1pm = (j1 + m1).to_int();
    const int j2mm = (j2 - m2).to_int();
    const int j2pm = (j2 + m2).to_int();
    const int j3mm = (j3 - m3).to_int();
    const int j3pm = (j3 + m3).to_int();
    const int t1 = (j3 - j2 + m1).to_int();
    const int t2 = (j3 - j1 - m2).to_int();

    BigRational prefactor = detail::triangle_factor_sq(j1, j2, j3);
    prefactor *= BigRational(factorial(j1pm) * factorial(j1mm) * factorial(j2pm) *
                             factorial(j2mm) * factorial(j3pm) * factorial(j3mm));

    const int zmin = std::max({0, -t1, -t2});
    const int zmax = std::min({jjj, j1mm, j2pm});
    BigRational sum = 0;
    for (int z = zmin; z <= zmax; ++z) {
        BigInt den = factorial(z) * factorial(jjj - z) * factorial(j1mm - z) *
                     factorial(j2pm - z) * factorial(t1 + z) * factorial(t2 + z);
        if (detail::odd(z))
            sum -= BigRational(1, den);
        else
            sum += BigRational(1, den);
    }
    if (sum == 0) return {};

    int sign = detail::odd((j1 - j2 - m3).to_int()) ? -1 : 1;
    if (sum < 0) sign = -sign;
    SqrtRational result = SqrtRational::sqrt_of(prefactor * sum * sum);
    return sign < 0 ? -result : result;
}

/// Exact Wigner 6j symbol {j1 j2 j3; j4 j5 j6}.
///
/// Returns zero when any of the four triads (j1 j2 j3), (j1 j5 j6),
/// (j4 j2 j6), (j4 j5 j3) violates the triangle rule; negative arguments
/// throw std::domain_error.
inline SqrtRational six_j(HalfInt j1, HalfInt j2, HalfInt j3,
                          HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6})
        if (j.is_negative())
            throw std::domain_error("six_j: negative argument " + j.str());

    if (!triangle_satisfied(j1, j2, j3) || !triangle_satisfied(j1, j5, j6) ||
        !triangle_satisfied(j4, j2, j6) || !triangle_satisfied(j4, j5, j3))
        return {};

    BigRational prefactor = detail::triangle_factor_sq(j1, j2, j3) *
                            detail::triangle_factor_sq(j1, j5, j6) *
                            detail::triangle_factor_sq(j4, j2, j6) *
                            detail::triangle_factor_sq(j4, j5, j3);

    const int a1 = (j1 + j2 + j3).to_int();
    const int a2 = (j1 + j5 + j6).to_int();
    const int a3 = (j4 + j2 + j6).to_int();
    const int a4 = (j4 + j5 + j3).to_int();
    const int b1 = (j1 + j2 + j4 + j5).to_int();
    const int b2 = (j2 + j3 + j5 + j6).to_int();
    const int b3 = (j3 + j1 + j6 + j4).to_int();

    const int zmin = std::max({a1, a2, a3, a4});
    const int zmax = std::min({b1, b2, b3});
    BigRational sum = 0;
    for (int z = zmin; z <= zmax; ++z) {
        BigInt den = factorial(z - a1) * factorial(z - a2) * factorial(z - a3) *
                     factorial(z - a4) * factorial(b1 - z) * factorial(b2 - z) *
                     factorial(b3 - z);
        BigRational term(factorial(z + 1), den);
        if (detail::odd(z))
            sum -= term;
        else
            sum += term;
    }
    if (sum == 0) return {};

    SqrtRational result = SqrtRational::sqrt_of(prefactor * sum * sum);
    return sum < 0 ? -result : result;
}

} // namespace spinalg
