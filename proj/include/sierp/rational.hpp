#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sierp {

// Exact rational scalar. mpq_class keeps numerator/denominator reduced with a
// positive denominator as long as every value is canonicalized on entry,
// which make_rational and parse_rational guarantee.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" with optional leading minus. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// r^e for a nonnegative integer exponent; 0^0 = 1.
Rational pow(const Rational& r, unsigned e);

}  // namespace sierp
