#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace goodman {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) {
    return r.sign();
}

inline Rational abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

// "p/q" with q omitted when 1. Used by the report writers so exactness
// survives serialization.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

}  // namespace goodman
