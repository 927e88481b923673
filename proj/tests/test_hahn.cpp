#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonarch/errors.hpp"
#include "nonarch/json_io.hpp"
#include "nonarch/rng.hpp"
#include "nonarch/series.hpp"
#include "nonarch/series_text.hpp"
#include "oracles.hpp"

using namespace nonarch;

namespace {

QuadExt qe(long num, long den = 1) { return QuadExt(make_rational(num, den), Rational(0)); }

Series mono_q(long num, long den, long cnum, long cden = 1) {
  return Series::monomial(qe(num, den), Coeff::rational(make_rational(cnum, cden)));
}

Series random_series(SampleRng& rng, FieldTag tag, bool with_sqrt2 = false) {
  std::vector<Series::Term> terms;
  std::size_t n = rng.bounded(4);
  for (std::size_t i = 0; i < n; ++i) {
    QuadExt e(make_rational(rng.int_range(-6, 6), rng.int_range(1, 4)),
              with_sqrt2 ? make_rational(rng.int_range(-2, 2), 2) : Rational(0));
    Coeff c = Coeff::zero(tag);
    switch (tag) {
      case FieldTag::F2: c = Coeff::gf(tag, 1); break;
      case FieldTag::F3: c = Coeff::gf(tag, 1 + rng.bounded(2)); break;
      case FieldTag::Q: c = Coeff::rational(make_rational(rng.int_range(-4, 4))); break;
      case FieldTag::Qi:
        c = Coeff::complex(make_rational(rng.int_range(-3, 3)),
                           make_rational(rng.int_range(-3, 3)));
        break;
    }
    if (!c.is_zero()) terms.push_back({e, c});
  }
  return Series::from_terms(tag, std::move(terms));
}

}  // namespace

TEST_CASE("addition: frozen examples") {
  // (t^(1/2) + t) + (-t^(1/2)) = t over Q.
  Series x = hs_add(mono_q(1, 2, 1), mono_q(1, 1, 1));
  Series y = mono_q(1, 2, -1);
  CHECK(hs_add(x, y) == mono_q(1, 1, 1));
  // 0 + x = x.
  CHECK(hs_add(Series::zero(FieldTag::Q), x) == x);
  // (1 + t^(1/2)) + (1 + t^(3/4)) over GF(2): constants cancel.
  Series one = Series::one(FieldTag::F2);
  Series a = hs_add(one, Series::monomial(qe(1, 2), Coeff::one(FieldTag::F2)));
  Series b = hs_add(one, Series::monomial(qe(3, 4), Coeff::one(FieldTag::F2)));
  Series want = hs_add(Series::monomial(qe(1, 2), Coeff::one(FieldTag::F2)),
                       Series::monomial(qe(3, 4), Coeff::one(FieldTag::F2)));
  CHECK(hs_add(a, b) == want);
}

TEST_CASE("multiplication: frozen examples and the schoolbook oracle") {
  CHECK(hs_mul(mono_q(1, 2, 1), mono_q(1, 2, 1)) == mono_q(1, 1, 1));
  Series x = hs_add(mono_q(0, 1, 1), mono_q(1, 1, 1));   // 1 + t
  Series y = hs_add(mono_q(0, 1, 1), mono_q(1, 1, -1));  // 1 - t
  Series want = hs_add(mono_q(0, 1, 1), mono_q(2, 1, -1));  // 1 - t^2
  CHECK(hs_mul(x, y) == want);
  CHECK(hs_mul(x, Series::zero(FieldTag::Q)).is_zero());

  SampleRng rng(21);
  for (int i = 0; i < 200; ++i) {
    FieldTag tag = static_cast<FieldTag>(rng.bounded(4));
    Series a = random_series(rng, tag);
    Series b = random_series(rng, tag);
    CHECK(hs_mul(a, b) == oracle::naive_mul(a, b));
  }
}

TEST_CASE("valuation: frozen examples") {
  Series x = hs_add(mono_q(1, 2, 1), mono_q(3, 4, 1));
  CHECK(x.valuation() == Level::finite(qe(1, 2)));
  CHECK(Series::zero(FieldTag::Q).valuation().is_infinite());
  Series y = hs_add(mono_q(0, 1, 3), mono_q(1, 1, 1));
  CHECK(y.valuation() == Level::finite(qe(0)));
}

TEST_CASE("valuation laws on random samples") {
  SampleRng rng(22);
  for (int i = 0; i < 300; ++i) {
    FieldTag tag = static_cast<FieldTag>(rng.bounded(4));
    Series a = random_series(rng, tag);
    Series b = random_series(rng, tag);
    CHECK(hs_mul(a, b).valuation() == a.valuation() + b.valuation());
    Level sum = hs_add(a, b).valuation();
    CHECK(sum >= min(a.valuation(), b.valuation()));
    if (a.valuation() != b.valuation()) {
      CHECK(sum == min(a.valuation(), b.valuation()));
    }
  }
}

TEST_CASE("inversion: frozen examples") {
  auto inv_mono = hs_invert(mono_q(1, 2, 1), qe(1));
  CHECK(inv_mono.exact);
  CHECK(inv_mono.value == mono_q(-1, 2, 1));

  // invert(1 - t, precision 3) = 1 + t + t^2 + t^3 with nu(x*y - 1) = 4.
  Series x = hs_add(mono_q(0, 1, 1), mono_q(1, 1, -1));
  auto r = hs_invert(x, qe(3));
  CHECK_FALSE(r.exact);
  Series want = Series::zero(FieldTag::Q);
  for (long k = 0; k <= 3; ++k) want = hs_add(want, mono_q(k, 1, 1));
  CHECK(r.value == want);
  Series defect = hs_sub(hs_mul(x, r.value), Series::one(FieldTag::Q));
  CHECK(defect.valuation() == Level::finite(qe(4)));

  auto half = hs_invert(mono_q(0, 1, 2), qe(10));
  CHECK(half.exact);
  CHECK(half.value == mono_q(0, 1, 1, 2));

  CHECK_THROWS_AS(hs_invert(Series::zero(FieldTag::Q), qe(1)), DivisionByZero);
}

TEST_CASE("inversion meets its precision bound on random inputs") {
  SampleRng rng(23);
  for (int i = 0; i < 150; ++i) {
    FieldTag tag = static_cast<FieldTag>(rng.bounded(4));
    Series a = random_series(rng, tag);
    if (a.is_zero()) continue;
    QuadExt precision = qe(rng.int_range(0, 6));
    auto r = hs_invert(a, precision);
    Series defect = hs_sub(hs_mul(a, r.value), Series::one(tag));
    CHECK(defect.valuation() > Level::finite(precision));
    if (r.exact) CHECK(defect.is_zero());
  }
}

TEST_CASE("frobenius: frozen examples and the power oracle") {
  Series x = hs_add(Series::one(FieldTag::F2),
                    Series::monomial(qe(1, 2), Coeff::one(FieldTag::F2)));
  Series want = hs_add(Series::one(FieldTag::F2),
                       Series::monomial(qe(1), Coeff::one(FieldTag::F2)));
  CHECK(hs_frobenius(x) == want);
  CHECK(hs_frobenius(Series::monomial(qe(1, 3), Coeff::one(FieldTag::F3))) ==
        Series::monomial(qe(1), Coeff::one(FieldTag::F3)));
  CHECK(hs_frobenius(Series::zero(FieldTag::F2)).is_zero());
  CHECK_THROWS_AS(hs_frobenius(Series::one(FieldTag::Q)), TagMismatch);

  SampleRng rng(24);
  for (int i = 0; i < 200; ++i) {
    FieldTag tag = rng.coin() ? FieldTag::F2 : FieldTag::F3;
    Series a = random_series(rng, tag);
    CHECK(hs_frobenius(a) == oracle::naive_char_power(a));
    int p = field_characteristic(tag);
    CHECK(hs_frobenius(a).valuation() == scale(qe(p), a.valuation()));
  }
}

TEST_CASE("tits endomorphism: sigma squared is frobenius, nu scales by sqrt2") {
  CHECK(hs_tits_sigma(Series::monomial(qe(1), Coeff::one(FieldTag::F2))) ==
        Series::monomial(QuadExt(Rational(0), Rational(1)), Coeff::one(FieldTag::F2)));
  Series x = hs_add(Series::one(FieldTag::F2),
                    Series::monomial(qe(1), Coeff::one(FieldTag::F2)));
  CHECK(hs_tits_sigma(x) ==
        hs_add(Series::one(FieldTag::F2),
               Series::monomial(QuadExt(Rational(0), Rational(1)), Coeff::one(FieldTag::F2))));
  CHECK(hs_tits_sigma(Series::zero(FieldTag::F2)).is_zero());
  CHECK_THROWS_AS(hs_tits_sigma(Series::one(FieldTag::Q)), TagMismatch);

  SampleRng rng(25);
  for (int i = 0; i < 300; ++i) {
    Series a = random_series(rng, FieldTag::F2, true);
    CHECK(hs_tits_sigma(hs_tits_sigma(a)) == hs_frobenius(a));
    CHECK(hs_tits_sigma(a).valuation() ==
          scale(QuadExt(Rational(0), Rational(1)), a.valuation()));
  }
}

TEST_CASE("conjugation: involutive, valuation-preserving, fixes real series") {
  Series x = Series::monomial(qe(1), Coeff::complex(Rational(1), Rational(1)));
  CHECK(hs_conjugate(x) ==
        Series::monomial(qe(1), Coeff::complex(Rational(1), Rational(-1))));
  Series real = Series::monomial(qe(2), Coeff::complex(Rational(3), Rational(0)));
  CHECK(hs_conjugate(real) == real);
  Series mixed = hs_add(Series::monomial(qe(1, 2), Coeff::imaginary_unit()),
                        Series::monomial(qe(1), Coeff::complex(Rational(1), Rational(0))));
  Series want = hs_add(Series::monomial(qe(1, 2), coeff_neg(Coeff::imaginary_unit())),
                       Series::monomial(qe(1), Coeff::complex(Rational(1), Rational(0))));
  CHECK(hs_conjugate(mixed) == want);
  CHECK_THROWS_AS(hs_conjugate(Series::one(FieldTag::Q)), TagMismatch);

  SampleRng rng(26);
  for (int i = 0; i < 200; ++i) {
    Series a = random_series(rng, FieldTag::Qi);
    CHECK(hs_conjugate(hs_conjugate(a)) == a);
    CHECK(hs_conjugate(a).valuation() == a.valuation());
    CHECK(hs_sigma_fixed(a) == (hs_conjugate(a) == a));
  }
}

TEST_CASE("subfield predicates") {
  CHECK(hs_in_subfield(mono_q(2, 1, 1), SubfieldPredicate::exponents_in_lattice(qe(2))));
  CHECK_FALSE(
      hs_in_subfield(mono_q(1, 2, 1), SubfieldPredicate::exponents_in_lattice(qe(1))));
  Series it = Series::monomial(qe(1), Coeff::imaginary_unit());
  CHECK_FALSE(hs_in_subfield(it, SubfieldPredicate::coefficients_sigma_fixed()));
  CHECK(hs_in_subfield(it, SubfieldPredicate::all()));
  // sqrt2-lattice membership.
  Series s2 = Series::monomial(QuadExt(Rational(0), Rational(2)), Coeff::one(FieldTag::F2));
  CHECK(hs_in_subfield(
      s2, SubfieldPredicate::exponents_in_lattice(QuadExt(Rational(0), Rational(1)))));
  CHECK_FALSE(hs_in_subfield(
      Series::monomial(qe(1), Coeff::one(FieldTag::F2)),
      SubfieldPredicate::exponents_in_lattice(QuadExt(Rational(0), Rational(1)))));
}

TEST_CASE("expression parser: frozen examples") {
  Series a = parse_series_expression(FieldTag::Q, "t^(1/2) + 3*t^(2)");
  CHECK(a.valuation() == Level::finite(qe(1, 2)));
  CHECK(a.terms().size() == 2);

  Series b = parse_series_expression(FieldTag::F2, "t^(1+1*s)");
  CHECK(b.valuation() == Level::finite(QuadExt(Rational(1), Rational(1))));

  Series c = parse_series_expression(FieldTag::Q, "0");
  CHECK(c.valuation().is_infinite());

  Series d = parse_series_expression(FieldTag::Qi, "i*t^(1/2) + t");
  CHECK(d == hs_add(Series::monomial(qe(1, 2), Coeff::imaginary_unit()),
                    Series::monomial(qe(1), Coeff::one(FieldTag::Qi))));

  Series e = parse_series_expression(FieldTag::Q, "1 - t + 1/2*t^(3)");
  CHECK(e.terms().size() == 3);

  Series f = parse_series_expression(FieldTag::Qi, "(1+2*i)*t^(1)");
  CHECK(f == Series::monomial(qe(1), Coeff::complex(Rational(1), Rational(2))));

  // GF(2) sums collapse mod 2.
  Series g = parse_series_expression(FieldTag::F2, "1 + t + 1");
  CHECK(g == Series::monomial(qe(1), Coeff::one(FieldTag::F2)));
}

TEST_CASE("expression parser: errors carry positions") {
  CHECK_THROWS_AS(parse_series_expression(FieldTag::Q, "i*t"), ParseError);
  CHECK_THROWS_AS(parse_series_expression(FieldTag::Q, "t^(1/2"), ParseError);
  CHECK_THROWS_AS(parse_series_expression(FieldTag::Q, ""), ParseError);
  CHECK_THROWS_AS(parse_series_expression(FieldTag::Q, "t^2"), ParseError);
  CHECK_THROWS_AS(parse_series_expression(FieldTag::F2, "1/2*t"), ParseError);
  try {
    parse_series_expression(FieldTag::Q, "t^(1/2) ? 3");
  } catch (const ParseError& e) {
    CHECK(e.pos == 8);
  }
}

TEST_CASE("series JSON round-trips bit-exactly") {
  SampleRng rng(27);
  for (int i = 0; i < 200; ++i) {
    FieldTag tag = static_cast<FieldTag>(rng.bounded(4));
    Series a = random_series(rng, tag, tag == FieldTag::F2);
    Json j = series_to_json(a);
    CHECK(series_from_json(j) == a);
    CHECK(series_to_json(series_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("mixed-field arithmetic is rejected") {
  CHECK_THROWS_AS(hs_add(Series::one(FieldTag::Q), Series::one(FieldTag::Qi)), TagMismatch);
  CHECK_THROWS_AS(hs_mul(Series::one(FieldTag::F2), Series::one(FieldTag::F3)), TagMismatch);
}
