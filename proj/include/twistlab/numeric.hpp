#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace twistlab {

// Arbitrary-precision integers and exact rationals. Everything in the
// library computes over these; there is no floating point anywhere, so
// every equality test is decidable.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

/// Canonical text form of a rational: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace twistlab
