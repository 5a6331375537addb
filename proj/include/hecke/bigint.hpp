#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(BigInt const& v) { return v.str(); }

/// "7" for integers, "7/2" otherwise.
inline std::string to_decimal(Rational const& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integer(Rational const& v) { return denominator(v) == 1; }

inline BigInt pow2(unsigned e) {
    BigInt v = 1;
    v <<= e;
    return v;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt v = 1;
    for (long long i = 1; i <= k; ++i) {
        v *= (n - k + i);
        v /= i;
    }
    return v;
}

inline long double to_long_double(BigInt const& v) { return v.convert_to<long double>(); }
inline long double to_long_double(Rational const& v) { return v.convert_to<long double>(); }

}  // namespace hecke
