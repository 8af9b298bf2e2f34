#pragma once

#include <gmpxx.h>

#include <string>

namespace coha {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Signed form used by the element grammar: "+1", "-1/2".
std::string to_signed_string(const Rational& q);

// Parses "p", "p/q", "+p/q" or "-p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline Rational sign_power(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace coha
