#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace natbundle {

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p/q" or "p" with optional leading sign. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. Throws InvalidRequest when den = 0.
Rational make_rational(long num, long den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

bool is_integral(const Rational& q);

/// Floor of q as a machine integer; throws IntegralityError on overflow.
long floor_to_long(const Rational& q);

/// q as a machine integer; throws IntegralityError if q is not integral.
long to_long(const Rational& q);

}  // namespace natbundle
