#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace placeode {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Splits |n| * sign(n) = square^2 * core with core as squarefree as trial division allows.
void square_split(const Integer& n, Integer& square, Integer& core);

} // namespace placeode
