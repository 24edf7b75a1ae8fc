#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace knc {

// Arbitrary precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n", "-n", "n/d" (whitespace trimmed). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Exact square root of a nonnegative rational square, if any.
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_integer(const Rational& q);

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);

}  // namespace knc
