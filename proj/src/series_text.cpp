#include "nonarch/series_text.hpp"

#include <cctype>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected ") + what, i);
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }

  Rational rational() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits", i);
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t den = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == den) throw ParseError("expected denominator digits", i);
    }
    return rational_from_string(s.substr(start, i - start));
  }
};

// "a" | "a/b" | with +/- combinations and '*s' factors, up to ')'.
QuadExt quadext_body(Cursor& c) {
  QuadExt acc;
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      break;
    }
    if (c.peek() == 's') {
      ++c.i;
      acc.b += sign;
    } else {
      Rational r = c.rational();
      if (c.peek() == '*') {
        ++c.i;
        c.expect('s', "'s' after '*' in exponent");
        acc.b += sign * r;
      } else {
        acc.a += sign * r;
      }
    }
    first = false;
    char nxt = c.peek();
    if (nxt != '+' && nxt != '-') break;
  }
  if (first) throw ParseError("empty exponent", c.i);
  return acc;
}

Coeff coeff_from_rational(FieldTag tag, const Rational& r, std::size_t at) {
  switch (tag) {
    case FieldTag::F2:
    case FieldTag::F3:
      if (r.get_den() != 1)
        throw ParseError("finite-field coefficient must be an integer", at);
      return Coeff::gf(tag, static_cast<long>(r.get_num().get_si()));
    case FieldTag::Q:
      return Coeff::rational(r);
    case FieldTag::Qi:
      return Coeff::complex(r, Rational(0));
  }
  throw ParseError("bad field", at);
}

// Parenthesized Qi coefficient body: "a/b" with optional "+c/d*i" parts.
Coeff coeff_paren_body(FieldTag tag, Cursor& c) {
  Rational re(0), im(0);
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      break;
    }
    if (c.peek() == 'i') {
      ++c.i;
      im += sign;
    } else {
      Rational r = c.rational();
      if (c.peek() == '*') {
        ++c.i;
        c.expect('i', "'i' after '*' in coefficient");
        im += sign * r;
      } else {
        re += sign * r;
      }
    }
    first = false;
    char nxt = c.peek();
    if (nxt != '+' && nxt != '-') break;
  }
  if (first) throw ParseError("empty coefficient", c.i);
  if (im != 0 && tag != FieldTag::Qi)
    throw ParseError("imaginary coefficient outside Q(i)", c.i);
  if (tag == FieldTag::Qi) return Coeff::complex(re, im);
  return coeff_from_rational(tag, re, c.i);
}

}  // namespace

Series parse_series_expression(FieldTag tag, std::string_view text) {
  Cursor c{text};
  Series acc = Series::zero(tag);
  bool first = true;
  while (true) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      break;
    }
    if (first && c.done()) throw ParseError("empty expression", c.i);

    Coeff coeff = Coeff::one(tag);
    bool have_coeff = false;
    char nxt = c.peek();
    if (nxt == '(') {
      ++c.i;
      coeff = coeff_paren_body(tag, c);
      c.expect(')', "')' after coefficient");
      have_coeff = true;
    } else if (nxt == 'i') {
      std::size_t at = c.i;
      if (tag != FieldTag::Qi) throw ParseError("'i' outside Q(i)", at);
      ++c.i;
      coeff = Coeff::imaginary_unit();
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(nxt))) {
      std::size_t at = c.i;
      Rational r = c.rational();
      coeff = coeff_from_rational(tag, r, at);
      have_coeff = true;
    }

    QuadExt exp;
    bool have_mono = false;
    if (have_coeff) {
      c.skip_ws();
      std::size_t save = c.i;
      if (c.peek() == '*') {
        ++c.i;
        if (c.peek() == 't') {
          ++c.i;
          have_mono = true;
        } else {
          c.i = save;  // multiplication not followed by t: reject
          throw ParseError("expected 't' after '*'", c.i + 1);
        }
      }
    } else {
      if (c.peek() != 't')
        throw ParseError("expected coefficient or 't'", c.i);
      ++c.i;
      have_mono = true;
    }
    if (have_mono) {
      if (c.peek() == '^') {
        ++c.i;
        c.expect('(', "'(' after '^'");
        exp = quadext_body(c);
        c.expect(')', "')' after exponent");
      } else {
        exp = QuadExt(1);
      }
    }

    if (sign < 0) coeff = coeff_neg(coeff);
    acc = hs_add(acc, Series::monomial(exp, coeff));
    first = false;

    if (c.done()) break;
    char sep = c.peek();
    if (sep != '+' && sep != '-')
      throw ParseError("expected '+' or '-' between terms", c.i);
  }
  return acc;
}

}  // namespace nonarch
