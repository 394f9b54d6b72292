#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qchom {

// Exact, unbounded integer. Every enumeration result is a Count; intermediate
// closed-form arithmetic may go negative before the final subtraction settles.
using Count = boost::multiprecision::cpp_int;

// Exact rational, used only where a printed formula carries a 1/2 factor.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Count& c) { return c.str(); }

// "a" for integers, "a/b" otherwise.
std::string to_decimal(const Rational& r);

Count factorial(int n);

// Falling factorial n (n-1) ... (n-k+1); zero when k > n >= 0.
Count falling(int n, int k);

// Binomial coefficient; zero outside 0 <= k <= n.
Count binomial(int n, int k);

Count power(const Count& base, int exponent);

}  // namespace qchom
