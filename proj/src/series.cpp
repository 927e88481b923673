#include "nonarch/series.hpp"

#include <algorithm>
#include <map>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

void require_same_field(const Series& x, const Series& y) {
  if (x.field() != y.field())
    throw TagMismatch(std::string("series fields differ: ") + field_tag_name(x.field()) +
                      " vs " + field_tag_name(y.field()));
}

struct QuadExtLess {
  bool operator()(const QuadExt& x, const QuadExt& y) const { return x < y; }
};

}  // namespace

Series Series::constant(Coeff c) {
  return monomial(QuadExt(), std::move(c));
}

Series Series::monomial(QuadExt exp, Coeff c) {
  Series s(c.tag());
  if (!c.is_zero()) s.terms_.push_back({std::move(exp), std::move(c)});
  return s;
}

Series Series::from_terms(FieldTag tag, std::vector<Term> terms) {
  std::map<QuadExt, Coeff, QuadExtLess> acc;
  for (auto& t : terms) {
    if (t.coeff.tag() != tag) throw TagMismatch("term coefficient tag mismatch");
    auto it = acc.find(t.exp);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exp), std::move(t.coeff));
    } else {
      it->second = coeff_add(it->second, t.coeff);
    }
  }
  Series s(tag);
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) s.terms_.push_back({e, c});
  }
  return s;
}

Level Series::valuation() const {
  if (terms_.empty()) return Level::infinity();
  return Level::finite(terms_.front().exp);
}

const Series::Term& Series::leading() const { return terms_.front(); }

bool operator==(const Series& x, const Series& y) {
  if (x.tag_ != y.tag_ || x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].exp != y.terms_[i].exp) return false;
    if (x.terms_[i].coeff != y.terms_[i].coeff) return false;
  }
  return true;
}

Series hs_add(const Series& x, const Series& y) {
  require_same_field(x, y);
  Series out(x.field());
  std::vector<Series::Term> terms;
  terms.reserve(x.terms().size() + y.terms().size());
  auto xi = x.terms().begin(), xe = x.terms().end();
  auto yi = y.terms().begin(), ye = y.terms().end();
  while (xi != xe && yi != ye) {
    if (xi->exp < yi->exp) {
      terms.push_back(*xi++);
    } else if (yi->exp < xi->exp) {
      terms.push_back(*yi++);
    } else {
      Coeff c = coeff_add(xi->coeff, yi->coeff);
      if (!c.is_zero()) terms.push_back({xi->exp, std::move(c)});
      ++xi;
      ++yi;
    }
  }
  terms.insert(terms.end(), xi, xe);
  terms.insert(terms.end(), yi, ye);
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_neg(const Series& x) {
  std::vector<Series::Term> terms = x.terms();
  for (auto& t : terms) t.coeff = coeff_neg(t.coeff);
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_sub(const Series& x, const Series& y) { return hs_add(x, hs_neg(y)); }

Series hs_mul(const Series& x, const Series& y) {
  require_same_field(x, y);
  std::map<QuadExt, Coeff, QuadExtLess> acc;
  for (const auto& tx : x.terms()) {
    for (const auto& ty : y.terms()) {
      QuadExt e = tx.exp + ty.exp;
      Coeff c = coeff_mul(tx.coeff, ty.coeff);
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(std::move(e), std::move(c));
      } else {
        it->second = coeff_add(it->second, c);
      }
    }
  }
  std::vector<Series::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) terms.push_back({e, c});
  }
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_scale(const Coeff& c, const Series& x) {
  if (c.tag() != x.field()) throw TagMismatch("scalar tag mismatch");
  std::vector<Series::Term> terms;
  for (const auto& t : x.terms()) {
    Coeff p = coeff_mul(c, t.coeff);
    if (!p.is_zero()) terms.push_back({t.exp, std::move(p)});
  }
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_shift(const Series& x, const QuadExt& e) {
  std::vector<Series::Term> terms = x.terms();
  for (auto& t : terms) t.exp = t.exp + e;
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_pow(const Series& x, unsigned long n) {
  Series acc = Series::one(x.field());
  for (unsigned long i = 0; i < n; ++i) acc = hs_mul(acc, x);
  return acc;
}

InvertResult hs_invert(const Series& x, const QuadExt& precision) {
  if (x.is_zero()) throw DivisionByZero("series inverse of zero");
  const auto& lead = x.leading();
  Series base = Series::monomial(-lead.exp, coeff_inv(lead.coeff));
  // x * base = 1 + u with nu(u) > 0.
  Series u = hs_sub(hs_mul(x, base), Series::one(x.field()));
  if (u.is_zero()) return {base, true};
  const QuadExt& nu_u = u.terms().front().exp;
  // Smallest N with (N+1) * nu(u) > precision.
  mpz_class f = quadext_floor(quadext_div(precision, nu_u));
  long steps = 0;
  if (f > 0) {
    if (f > 100000) throw std::runtime_error("inversion precision too deep");
    steps = f.get_si();
  }
  Series minus_u = hs_neg(u);
  Series acc = Series::one(x.field());
  for (long i = 0; i < steps; ++i) {
    acc = hs_add(Series::one(x.field()), hs_mul(minus_u, acc));
  }
  return {hs_mul(base, acc), false};
}

Series hs_frobenius(const Series& x) {
  int p = field_characteristic(x.field());
  if (p == 0) throw TagMismatch("frobenius needs positive characteristic");
  std::vector<Series::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    terms.push_back({make_rational(p) * t.exp, coeff_pow_char(t.coeff)});
  }
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_tits_sigma(const Series& x) {
  if (x.field() != FieldTag::F2)
    throw TagMismatch("tits endomorphism defined on GF(2) series only");
  std::vector<Series::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    terms.push_back({quadext_scale_sqrt2(t.exp), t.coeff});
  }
  return Series::from_terms(x.field(), std::move(terms));
}

Series hs_conjugate(const Series& x) {
  if (x.field() != FieldTag::Qi)
    throw TagMismatch("conjugation defined on Q(i) series only");
  std::vector<Series::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    terms.push_back({t.exp, coeff_conj(t.coeff)});
  }
  return Series::from_terms(x.field(), std::move(terms));
}

bool hs_in_subfield(const Series& x, const SubfieldPredicate& p) {
  switch (p.kind) {
    case SubfieldPredicate::Kind::All:
      return true;
    case SubfieldPredicate::Kind::CoefficientsSigmaFixed:
      return hs_sigma_fixed(x);
    case SubfieldPredicate::Kind::ExponentsInLattice: {
      for (const auto& t : x.terms()) {
        // e must equal n * generator for an integer n. Componentwise:
        // if the generator has a single nonzero component, the other
        // component of e must vanish.
        const QuadExt& g = p.generator;
        const QuadExt& e = t.exp;
        if (g.is_zero()) {
          if (!e.is_zero()) return false;
          continue;
        }
        Rational n;
        if (g.a != 0) {
          n = e.a / g.a;
        } else {
          n = e.b / g.b;
        }
        if (n.get_den() != 1) return false;
        if (e.a != n * g.a || e.b != n * g.b) return false;
      }
      return true;
    }
  }
  return false;
}

bool hs_sigma_fixed(const Series& x) {
  if (x.field() != FieldTag::Qi) return true;
  for (const auto& t : x.terms()) {
    if (t.coeff.im() != 0) return false;
  }
  return true;
}

std::string series_to_string(const Series& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    if (!first) out += " + ";
    std::string c = coeff_to_string(t.coeff);
    if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos) {
      c = "(" + c + ")";
    }
    out += c + "*t^(" + quadext_to_string(t.exp) + ")";
    first = false;
  }
  return out;
}

}  // namespace nonarch
