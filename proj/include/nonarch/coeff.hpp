#pragma once

#include <string>
#include <string_view>

#include "nonarch/rational.hpp"

namespace nonarch {

// Coefficient fields supported by the series layer.
enum class FieldTag { F2, F3, Q, Qi };

const char* field_tag_name(FieldTag tag);
FieldTag field_tag_from_name(std::string_view name);  // throws ParseError
int field_characteristic(FieldTag tag);               // 2, 3, 0, 0

// A coefficient in exactly one of GF(2), GF(3), Q, Q(i). Arithmetic never
// crosses tags; mixed-tag operations throw TagMismatch.
class Coeff {
 public:
  explicit Coeff(FieldTag tag) : tag_(tag), r_(0), re_(0), im_(0) {}

  static Coeff zero(FieldTag tag) { return Coeff(tag); }
  static Coeff one(FieldTag tag);
  static Coeff gf(FieldTag tag, long value);       // F2/F3, reduced mod p
  static Coeff rational(Rational re);              // tag Q
  static Coeff complex(Rational re, Rational im);  // tag Qi
  static Coeff imaginary_unit() { return complex(Rational(0), Rational(1)); }

  FieldTag tag() const { return tag_; }
  bool is_zero() const;
  bool is_one() const;

  // Components (meaningful per tag).
  unsigned residue() const { return r_; }
  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  friend bool operator==(const Coeff& x, const Coeff& y);
  friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

 private:
  FieldTag tag_;
  unsigned char r_;  // F2/F3 residue
  Rational re_, im_; // Q uses re_; Qi uses both
};

Coeff coeff_add(const Coeff& x, const Coeff& y);
Coeff coeff_neg(const Coeff& x);
Coeff coeff_sub(const Coeff& x, const Coeff& y);
Coeff coeff_mul(const Coeff& x, const Coeff& y);
Coeff coeff_inv(const Coeff& x);  // DivisionByZero on zero
// Complex conjugation on Qi; identity on the other tags.
Coeff coeff_conj(const Coeff& x);
// x^p for the field characteristic (frobenius); tag must be F2 or F3.
Coeff coeff_pow_char(const Coeff& x);

std::string coeff_to_string(const Coeff& c);

}  // namespace nonarch
