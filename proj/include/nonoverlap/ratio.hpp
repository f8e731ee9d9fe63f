#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonoverlap {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Ratio rpow(const Ratio& base, unsigned exp) {
    return Ratio(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

/// Round-to-nearest conversion that stays accurate when numerator and
/// denominator are individually far outside double range.
inline double to_double(const Ratio& x) {
    BigInt num = numerator(x);
    const BigInt& den = denominator(x);
    if (num == 0) return 0.0;
    const bool neg = num < 0;
    if (neg) num = -num;
    // Scale so num/den carries ~64 significant bits, convert, then undo.
    const long exp2 = static_cast<long>(msb(num)) - static_cast<long>(msb(den)) - 64;
    BigInt n = num, d = den;
    if (exp2 > 0)
        d <<= exp2;
    else
        n <<= -exp2;
    const double mant = BigInt(n / d).convert_to<double>();
    const double r = std::ldexp(mant, static_cast<int>(exp2));
    return neg ? -r : r;
}

/// Exact rational value of a finite double (every double is a dyadic rational).
inline Ratio ratio_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("ratio_from_double: value not finite");
    if (x == 0.0) return Ratio(0);
    int exp2 = 0;
    const double mant = std::frexp(x, &exp2);  // x = mant * 2^exp2, |mant| in [1/2, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));  // exact: 53-bit mantissa
    exp2 -= 53;
    if (exp2 >= 0) return Ratio(BigInt(scaled) << exp2, 1);
    return Ratio(scaled, BigInt(1) << -exp2);
}

/// If x is a square in Q, store its nonnegative root and return true.
inline bool exact_sqrt(const Ratio& x, Ratio& root) {
    if (x < 0) return false;
    const BigInt num = numerator(x), den = denominator(x);
    const BigInt rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    root = Ratio(rn, rd);
    return true;
}

inline std::string to_string(const Ratio& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace nonoverlap
