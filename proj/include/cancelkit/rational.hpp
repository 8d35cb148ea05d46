#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cancelkit {

using Integer = mpz_class;
/// Arbitrary-precision rational; GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" (no whitespace). Throws Error(kSyntaxError).
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// The first `count` rationals in height order: 0, 1, -1, 2, -2, 1/2, -1/2,
/// 3, -3, 1/3, -1/3, 3/2, ... (height max(|p|, q), then h/k before k/h).
std::vector<Rational> height_ordered_rationals(std::size_t count);
/// All rationals of height <= bound, in the same order.
std::vector<Rational> rationals_up_to_height(long bound);

}  // namespace cancelkit
