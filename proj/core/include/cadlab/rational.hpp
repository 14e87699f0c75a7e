#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace cadlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n", "n/d" or a decimal literal "12.375". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise (canonical, reduced).
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }
inline std::strong_ordering three_way(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

/// Largest integer strictly below q / smallest integer strictly above q.
Integer integer_below(const Rational& q);
Integer integer_above(const Rational& q);

/// Rational with the smallest denominator in the open interval (lo, hi), lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace cadlab
