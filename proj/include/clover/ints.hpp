#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace clover {

// Exact integer type for series coefficients and lattice arithmetic.
// Products of longitude expansions overflow 64 bits already at small
// truncation degrees, so everything downstream stays arbitrary precision.
using Int = boost::multiprecision::cpp_int;

// gcd conventions used throughout: gcd of an empty collection is 0,
// gcd(0, x) = |x|, results are never negative.
inline Int gcd_nonneg(const Int& a, const Int& b) {
    using boost::multiprecision::abs;
    return boost::multiprecision::gcd(abs(a), abs(b));
}

// Residue of v in [0, m); requires m > 0.
inline Int mod_floor(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0)
        r += m;
    return r;
}

}  // namespace clover
