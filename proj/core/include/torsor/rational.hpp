#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "torsor/integers.hpp"

namespace torsor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// phi(n)/n = prod_{p|n} (1 - 1/p), n >= 1.
Rational phi_star(i64 n);

// prod_{p|n} (1 + 1/p), n >= 1.
Rational phi_dagger(i64 n);

// A floating-point value with an absolute error/tail bound.
struct ValueWithTail {
    double value = 0.0;
    double tail = 0.0;
};

}  // namespace torsor
