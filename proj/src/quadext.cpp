#include "nonarch/quadext.hpp"

#include "nonarch/errors.hpp"

namespace nonarch {

int quadext_sign(const QuadExt& x) {
  int sa = sgn(x.a);
  int sb = sgn(x.b);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(2) decides, i.e. a^2 vs 2 b^2.
  Rational lhs = x.a * x.a;
  Rational rhs = 2 * x.b * x.b;
  // a^2 = 2 b^2 with rational a, b forces a = b = 0, excluded above.
  return lhs > rhs ? sa : sb;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }
QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b}; }
QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b}; }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadExt operator*(const Rational& r, const QuadExt& x) { return {r * x.a, r * x.b}; }

bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }

bool operator<(const QuadExt& x, const QuadExt& y) { return quadext_sign(x - y) < 0; }

QuadExt quadext_scale_sqrt2(const QuadExt& x) { return {2 * x.b, x.a}; }

QuadExt quadext_div(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw DivisionByZero("quadext division by zero");
  // 1/(a+b*s) = (a-b*s)/(a^2-2b^2); the denominator vanishes only at 0.
  Rational norm = y.a * y.a - 2 * y.b * y.b;
  QuadExt conj{y.a, -y.b};
  QuadExt num = x * conj;
  return {num.a / norm, num.b / norm};
}

mpz_class quadext_floor(const QuadExt& x) {
  if (x.b == 0) return floor_rational(x.a);
  for (unsigned prec = 32;; prec *= 2) {
    mpz_class scale = mpz_class(1) << prec;
    mpz_class root;
    mpz_class two_sq = 2 * scale * scale;
    mpz_sqrt(root.get_mpz_t(), two_sq.get_mpz_t());
    Rational lo_r = make_rational(root, scale);
    Rational hi_r = make_rational(root + 1, scale);
    Rational lo, hi;
    if (sgn(x.b) > 0) {
      lo = x.a + x.b * lo_r;
      hi = x.a + x.b * hi_r;
    } else {
      lo = x.a + x.b * hi_r;
      hi = x.a + x.b * lo_r;
    }
    mpz_class flo = floor_rational(lo);
    mpz_class fhi = floor_rational(hi);
    // sqrt(2) is irrational, so x is never an integer when b != 0 and the
    // bracket eventually separates from the integer lattice.
    if (flo == fhi) return flo;
  }
}

std::string quadext_to_string(const QuadExt& x) {
  if (x.b == 0) return rational_to_string(x.a);
  std::string out = rational_to_string(x.a);
  if (sgn(x.b) < 0) {
    out += "-" + rational_to_string(-x.b) + "*s";
  } else {
    out += "+" + rational_to_string(x.b) + "*s";
  }
  return out;
}

namespace {

struct PairScanner {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  Rational scan_rational() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits", i);
    std::size_t num_end = i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t den_start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == den_start) throw ParseError("expected denominator digits", i);
    }
    (void)num_end;
    return rational_from_string(s.substr(start, i - start));
  }
};

}  // namespace

QuadExt quadext_from_string(std::string_view text) {
  PairScanner sc{text};
  QuadExt acc;
  bool first = true;
  while (true) {
    sc.skip_ws();
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
      sign = sc.peek() == '-' ? -1 : 1;
      ++sc.i;
    } else if (!first) {
      if (sc.done()) break;
      throw ParseError("expected '+' or '-' between terms", sc.i);
    }
    sc.skip_ws();
    if (sc.peek() == 's') {
      ++sc.i;
      acc.b += sign;
    } else {
      Rational r = sc.scan_rational();
      sc.skip_ws();
      if (sc.peek() == '*') {
        ++sc.i;
        sc.skip_ws();
        if (sc.peek() != 's') throw ParseError("expected 's' after '*'", sc.i);
        ++sc.i;
        acc.b += sign * r;
      } else {
        acc.a += sign * r;
      }
    }
    first = false;
    if (sc.done()) break;
    sc.skip_ws();
    if (sc.peek() != '+' && sc.peek() != '-')
      throw ParseError("unexpected character in value literal", sc.i);
  }
  if (first) throw ParseError("empty value literal", 0);
  return acc;
}

}  // namespace nonarch
