#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace conjcount {

// Arbitrary-precision rational. gmpxx keeps results canonical (positive
// denominator, lowest terms) for all arithmetic operators.
using Rational = mpq_class;

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on bad input.
Rational rational_from_string(std::string_view s);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace conjcount
