#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace potency {

/// Arbitrary-precision integer; no floating point is used anywhere in the
/// homology or geometry modules.
using Int = boost::multiprecision::cpp_int;

/// Exact rational with positive denominator, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Integer floor of a rational.
inline Int rational_floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

/// Representative of r mod 1 in [0, 1).
inline Rational mod_one(const Rational& r) {
    return r - Rational(rational_floor(r));
}

}  // namespace potency
