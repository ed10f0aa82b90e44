#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quadpart {

/// Exact arbitrary-precision integer used for all coordinates, counts and
/// series coefficients. No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Floor division (quotient rounded toward -inf); cpp_int's operator/
/// truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

/// a mod b normalized into [0, |b|).
inline Int pos_mod(const Int& a, const Int& b) {
    Int m = a % b;
    if (m < 0) {
        m += abs(b);
    }
    return m;
}

} // namespace quadpart
