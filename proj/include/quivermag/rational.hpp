#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quivermag {

// GMP keeps mpq_class in lowest terms with a positive denominator after
// every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading minus sign.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace quivermag
