#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lathom {

// All arithmetic in the library is exact.  Integers are arbitrary precision;
// rationals are pairs of them kept in lowest terms by boost.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace lathom
