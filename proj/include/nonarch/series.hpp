#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nonarch/coeff.hpp"
#include "nonarch/lattice.hpp"
#include "nonarch/level.hpp"

namespace nonarch {

// Finite-support formal series sum c_e * t^e over a fixed coefficient
// field, with exponents in Q + Q*sqrt2. Terms are kept strictly increasing
// by exponent and never store zero coefficients; the zero series has an
// empty term list. Finite supports are trivially well ordered, so this is
// the computable fragment of the full generalized power series field.
class Series {
 public:
  struct Term {
    QuadExt exp;
    Coeff coeff;
  };

  Series() : tag_(FieldTag::Q) {}  // zero series over Q
  explicit Series(FieldTag tag) : tag_(tag) {}

  static Series zero(FieldTag tag) { return Series(tag); }
  static Series one(FieldTag tag) { return constant(Coeff::one(tag)); }
  static Series constant(Coeff c);
  static Series monomial(QuadExt exp, Coeff c);
  // Normalizing constructor: sorts, merges equal exponents, drops zeros.
  static Series from_terms(FieldTag tag, std::vector<Term> terms);

  FieldTag field() const { return tag_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  // min exponent of the support; infinity for the zero series.
  Level valuation() const;
  const Term& leading() const;  // first term; undefined on zero

  friend bool operator==(const Series& x, const Series& y);
  friend bool operator!=(const Series& x, const Series& y) { return !(x == y); }

 private:
  FieldTag tag_;
  std::vector<Term> terms_;
};

Series hs_add(const Series& x, const Series& y);
Series hs_neg(const Series& x);
Series hs_sub(const Series& x, const Series& y);
Series hs_mul(const Series& x, const Series& y);
Series hs_scale(const Coeff& c, const Series& x);
// x shifted by t^e (multiplication by a monomial with unit coefficient).
Series hs_shift(const Series& x, const QuadExt& e);
Series hs_pow(const Series& x, unsigned long n);

struct InvertResult {
  Series value;
  bool exact;  // true when the geometric expansion terminated (monomial input)
};

// Multiplicative inverse up to the given precision: the result y satisfies
// nu(x*y - 1) > precision. Monomials invert exactly regardless of the bound.
InvertResult hs_invert(const Series& x, const QuadExt& precision);

// x^p in characteristic p: coefficients to the p-th power, exponents scaled
// by p. Tags F2/F3 only.
Series hs_frobenius(const Series& x);

// Tits endomorphism on GF(2) series: exponents scaled by sqrt(2). Applying
// it twice equals frobenius.
Series hs_tits_sigma(const Series& x);

// Coefficientwise complex conjugation; tag Qi only.
Series hs_conjugate(const Series& x);

// Membership predicates for distinguished subfields/subspaces.
struct SubfieldPredicate {
  enum class Kind { ExponentsInLattice, CoefficientsSigmaFixed, All };
  Kind kind = Kind::All;
  QuadExt generator;  // for ExponentsInLattice: exponents in Z*generator

  static SubfieldPredicate all() { return {}; }
  static SubfieldPredicate exponents_in_lattice(QuadExt g) {
    return {Kind::ExponentsInLattice, std::move(g)};
  }
  static SubfieldPredicate coefficients_sigma_fixed() {
    return {Kind::CoefficientsSigmaFixed, QuadExt()};
  }
};

bool hs_in_subfield(const Series& x, const SubfieldPredicate& p);

// True when every coefficient is fixed by conjugation (trivially true for
// tags with identity conjugation).
bool hs_sigma_fixed(const Series& x);

std::string series_to_string(const Series& x);

}  // namespace nonarch
