#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nonarch {

// Exact rational arithmetic is delegated to GMP. mpq_class keeps values in
// lowest terms with positive denominator once canonicalized; the helpers
// below are the only construction paths used in this codebase.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form "num/den", denominator always explicit and positive.
std::string rational_to_string(const Rational& r);

// Accepts "a" or "a/b" with optional leading sign. Whole-string parse;
// throws ParseError on malformed input.
Rational rational_from_string(std::string_view text);

// floor(r) as an exact integer.
mpz_class floor_rational(const Rational& r);

}  // namespace nonarch
