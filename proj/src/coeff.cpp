#include "nonarch/coeff.hpp"

#include "nonarch/errors.hpp"

namespace nonarch {

const char* field_tag_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::F2: return "F2";
    case FieldTag::F3: return "F3";
    case FieldTag::Q: return "Q";
    case FieldTag::Qi: return "Qi";
  }
  return "?";
}

FieldTag field_tag_from_name(std::string_view name) {
  if (name == "F2") return FieldTag::F2;
  if (name == "F3") return FieldTag::F3;
  if (name == "Q") return FieldTag::Q;
  if (name == "Qi") return FieldTag::Qi;
  throw ParseError("unknown field tag '" + std::string(name) + "'", 0);
}

int field_characteristic(FieldTag tag) {
  switch (tag) {
    case FieldTag::F2: return 2;
    case FieldTag::F3: return 3;
    default: return 0;
  }
}

Coeff Coeff::one(FieldTag tag) {
  Coeff c(tag);
  switch (tag) {
    case FieldTag::F2:
    case FieldTag::F3: c.r_ = 1; break;
    case FieldTag::Q:
    case FieldTag::Qi: c.re_ = 1; break;
  }
  return c;
}

Coeff Coeff::gf(FieldTag tag, long value) {
  if (tag != FieldTag::F2 && tag != FieldTag::F3)
    throw TagMismatch("gf() requires a finite-field tag");
  int p = field_characteristic(tag);
  long r = value % p;
  if (r < 0) r += p;
  Coeff c(tag);
  c.r_ = static_cast<unsigned char>(r);
  return c;
}

Coeff Coeff::rational(Rational re) {
  Coeff c(FieldTag::Q);
  c.re_ = std::move(re);
  return c;
}

Coeff Coeff::complex(Rational re, Rational im) {
  Coeff c(FieldTag::Qi);
  c.re_ = std::move(re);
  c.im_ = std::move(im);
  return c;
}

bool Coeff::is_zero() const {
  switch (tag_) {
    case FieldTag::F2:
    case FieldTag::F3: return r_ == 0;
    case FieldTag::Q: return re_ == 0;
    case FieldTag::Qi: return re_ == 0 && im_ == 0;
  }
  return false;
}

bool Coeff::is_one() const {
  switch (tag_) {
    case FieldTag::F2:
    case FieldTag::F3: return r_ == 1;
    case FieldTag::Q: return re_ == 1;
    case FieldTag::Qi: return re_ == 1 && im_ == 0;
  }
  return false;
}

bool operator==(const Coeff& x, const Coeff& y) {
  if (x.tag_ != y.tag_) return false;
  switch (x.tag_) {
    case FieldTag::F2:
    case FieldTag::F3: return x.r_ == y.r_;
    case FieldTag::Q: return x.re_ == y.re_;
    case FieldTag::Qi: return x.re_ == y.re_ && x.im_ == y.im_;
  }
  return false;
}

namespace {
void require_same_tag(const Coeff& x, const Coeff& y) {
  if (x.tag() != y.tag())
    throw TagMismatch(std::string("coefficient tags differ: ") + field_tag_name(x.tag()) +
                      " vs " + field_tag_name(y.tag()));
}
}  // namespace

Coeff coeff_add(const Coeff& x, const Coeff& y) {
  require_same_tag(x, y);
  switch (x.tag()) {
    case FieldTag::F2:
    case FieldTag::F3: return Coeff::gf(x.tag(), x.residue() + y.residue());
    case FieldTag::Q: return Coeff::rational(x.re() + y.re());
    case FieldTag::Qi: return Coeff::complex(x.re() + y.re(), x.im() + y.im());
  }
  return x;
}

Coeff coeff_neg(const Coeff& x) {
  switch (x.tag()) {
    case FieldTag::F2: return x;
    case FieldTag::F3: return Coeff::gf(x.tag(), 3 - x.residue());
    case FieldTag::Q: return Coeff::rational(-x.re());
    case FieldTag::Qi: return Coeff::complex(-x.re(), -x.im());
  }
  return x;
}

Coeff coeff_sub(const Coeff& x, const Coeff& y) { return coeff_add(x, coeff_neg(y)); }

Coeff coeff_mul(const Coeff& x, const Coeff& y) {
  require_same_tag(x, y);
  switch (x.tag()) {
    case FieldTag::F2:
    case FieldTag::F3: return Coeff::gf(x.tag(), x.residue() * y.residue());
    case FieldTag::Q: return Coeff::rational(x.re() * y.re());
    case FieldTag::Qi:
      return Coeff::complex(x.re() * y.re() - x.im() * y.im(),
                            x.re() * y.im() + x.im() * y.re());
  }
  return x;
}

Coeff coeff_inv(const Coeff& x) {
  if (x.is_zero()) throw DivisionByZero("coefficient inverse of zero");
  switch (x.tag()) {
    case FieldTag::F2: return x;
    case FieldTag::F3: return x;  // 1 and 2 are both self-inverse mod 3
    case FieldTag::Q: return Coeff::rational(1 / x.re());
    case FieldTag::Qi: {
      Rational n = x.re() * x.re() + x.im() * x.im();
      return Coeff::complex(x.re() / n, -x.im() / n);
    }
  }
  return x;
}

Coeff coeff_conj(const Coeff& x) {
  if (x.tag() == FieldTag::Qi) return Coeff::complex(x.re(), -x.im());
  return x;
}

Coeff coeff_pow_char(const Coeff& x) {
  switch (x.tag()) {
    case FieldTag::F2: return x;  // c^2 = c in GF(2)
    case FieldTag::F3: return x;  // c^3 = c in GF(3)
    default:
      throw TagMismatch("frobenius needs positive characteristic");
  }
}

std::string coeff_to_string(const Coeff& c) {
  switch (c.tag()) {
    case FieldTag::F2:
    case FieldTag::F3: return std::to_string(c.residue());
    case FieldTag::Q: return rational_to_string(c.re());
    case FieldTag::Qi: {
      std::string out = rational_to_string(c.re());
      if (sgn(c.im()) < 0) {
        out += "-" + rational_to_string(-c.im()) + "*i";
      } else if (sgn(c.im()) > 0) {
        out += "+" + rational_to_string(c.im()) + "*i";
      }
      return out;
    }
  }
  return "?";
}

}  // namespace nonarch
