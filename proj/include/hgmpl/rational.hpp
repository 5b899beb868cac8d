#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace hgmpl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binomial with the zero extension C(p,q) = 0 for p < 0, q < 0 or p < q
inline long long binom(long long p, long long q) {
    if (p < 0 || q < 0 || p < q) return 0;
    if (q > p - q) q = p - q;
    long long r = 1;
    for (long long i = 1; i <= q; ++i) r = r * (p - q + i) / i;
    return r;
}

inline Int big_binom(long long p, long long q) {
    if (p < 0 || q < 0 || p < q) return 0;
    Int r = 1;
    for (long long i = 1; i <= q; ++i) {
        r *= (p - q + i);
        r /= i;
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace hgmpl
