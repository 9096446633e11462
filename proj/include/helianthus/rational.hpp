#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace helianthus {

/// Exact arbitrary-precision rational. GMP keeps it canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or an integer "n". Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", even for integers ("2/1").
std::string to_string(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

double to_double(const Rational& q);

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace helianthus
