#pragma once

#include <string>
#include <string_view>

#include "nonarch/rational.hpp"

namespace nonarch {

// Element of the ordered field Q(sqrt 2), stored as a + b*sqrt(2) with
// rational a, b. The representation is unique, so equality is componentwise;
// the total order agrees with the real order and is decided exactly.
struct QuadExt {
  Rational a;
  Rational b;

  QuadExt() : a(0), b(0) {}
  QuadExt(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit QuadExt(long n) : a(make_rational(n)), b(0) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
};

// Exact sign of the real number a + b*sqrt(2).
int quadext_sign(const QuadExt& x);

QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
QuadExt operator*(const Rational& r, const QuadExt& x);

bool operator==(const QuadExt& x, const QuadExt& y);
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
bool operator<(const QuadExt& x, const QuadExt& y);
inline bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

// sqrt(2) * x = 2b + a*sqrt(2). Applying twice doubles the argument.
QuadExt quadext_scale_sqrt2(const QuadExt& x);

// Exact division; throws DivisionByZero when y == 0.
QuadExt quadext_div(const QuadExt& x, const QuadExt& y);

// floor of the real value, exact (interval refinement around sqrt 2).
mpz_class quadext_floor(const QuadExt& x);
inline mpz_class quadext_ceil(const QuadExt& x) { return -quadext_floor(-x); }

// Canonical text form: "a/b" when the sqrt(2) part vanishes, otherwise
// "a/b+c/d*s" (or "a/b-c/d*s"); 's' denotes sqrt(2).
std::string quadext_to_string(const QuadExt& x);

// Accepts sums of rational terms and "r*s"/"s" terms, e.g. "1+1*s",
// "3/2", "-s". Whole-string parse.
QuadExt quadext_from_string(std::string_view text);

}  // namespace nonarch
