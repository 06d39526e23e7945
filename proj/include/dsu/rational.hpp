#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dsu {

using Rational = mpq_class;

// Parses an exact decimal such as "137.035999084", "-2.5e-3" or "1e4" into a
// canonical rational. Fractions "p/q" are accepted as well.
Rational parse_rational(std::string_view text);

// Parses a half-integer quantum number written as "p/2" (or "p/q" reducing to
// one). Throws UsageError when the value is not of the form (2k+1)/2.
Rational parse_half_integer(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace dsu
