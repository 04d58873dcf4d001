#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "orient/error.hpp"

namespace orient {

// All bound formulas are evaluated exactly; central binomials overflow
// 64 bits well inside the ranges the inequality checks cover.
using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k). Rejects negative arguments and k > n.
inline BigInt binom(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw RangeError("binom(" + std::to_string(n) + ", " + std::to_string(k) +
                         "): arguments must satisfy 0 <= k <= n");
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

/// C(m, floor(m/2)), the central column every threshold in this library uses.
inline BigInt central_binom(long m) { return binom(m, m / 2); }

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<long long>::min() &&
           v <= std::numeric_limits<long long>::max();
}

} // namespace orient
