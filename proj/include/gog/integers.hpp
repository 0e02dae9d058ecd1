#pragma once

// Exact arithmetic used everywhere: arbitrary-precision integers and
// rationals.  No floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gog {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; throws if r is not an integer.
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_int: value " + r.str() + " is not an integer");
    return numerator(r);
}

// Floor division and the corresponding remainder (cpp_int's % truncates).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Quotient minimizing |a - q*b|; used by the Smith normal form reduction.
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;  // 0 <= |r| < |b|, sign of b
    // r and b share a sign, so moving to q+1 always flips the remainder to
    // r - b with |r - b| = |b| - |r|, regardless of the sign of b.
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

}  // namespace gog
