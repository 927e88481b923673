#include "nonarch/extension.hpp"

#include <stdexcept>

#include "nonarch/errors.hpp"
#include "nonarch/families.hpp"

namespace nonarch {

Element ExtensionView::apply_x(const Series& l) const {
  if (l.is_zero()) return group->identity();
  return act(x, l);
}

ExtensionView::Decomposition ExtensionView::decompose(const Element& z) const {
  Series rz = rho(z);
  Series l = Series::zero(rz.field());
  if (!rz.is_zero()) {
    const auto& lead = rho_x.leading();
    l = hs_mul(rz, Series::monomial(-lead.exp, coeff_inv(lead.coeff)));
  }
  Element y = group->oplus(group->neg(apply_x(l)), z);
  return {std::move(l), std::move(y)};
}

namespace {

Element coordinate_unit(const GroupPtr& g, std::size_t index, const Series& value) {
  Element e = g->identity();
  e.parts[index] = value;
  return e;
}

// Zeroes coordinates [0, upto] of a sampled element (coordinate towers).
std::function<Element(SampleRng&)> zeroed_sampler(const GroupPtr& g, std::size_t upto) {
  return [g, upto](SampleRng& rng) {
    Element e = g->sample_element(rng);
    for (std::size_t i = 0; i <= upto && i < e.parts.size(); ++i) {
      e.parts[i] = Series::zero(e.parts[i].field());
    }
    return e;
  };
}

bool coords_vanish(const Element& e, std::size_t upto) {
  for (std::size_t i = 0; i <= upto && i < e.parts.size(); ++i) {
    if (!e.parts[i].is_zero()) return false;
  }
  return true;
}

ViewPtr make_triangle_view(FieldTag tag) {
  auto g = make_triangle_group(tag);
  auto v = std::make_shared<ExtensionView>();
  v->group = g;
  v->kline = g;
  v->name = g->id();
  v->x = {{Series::one(tag)}};
  v->rho_x = Series::one(tag);
  v->m = QuadExt(1);
  v->rho = [](const Element& e) { return e.parts[0]; };
  v->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
  v->in_tprime = [g](const Element& e) { return g->is_identity(e); };
  v->sample_tprime = [g](SampleRng&) { return g->identity(); };
  return v;
}

// K = Q(i) series with conjugation; T' = the fixed subfield K0, V = the
// anti-fixed line spanned by i. rho extracts the K0 coordinate along i.
ViewPtr make_involutory_view() {
  auto g = make_triangle_group(FieldTag::Qi);
  auto k0 = make_involutory_group();

  auto fixed_part = [](const Series& s) {
    Coeff half = Coeff::complex(make_rational(1, 2), Rational(0));
    return hs_scale(half, hs_add(s, hs_conjugate(s)));
  };
  auto anti_coordinate = [](const Series& s) {
    // (s - conj(s)) / (2i) = K0 coordinate along i.
    Coeff inv_2i = Coeff::complex(Rational(0), make_rational(-1, 2));
    return hs_scale(inv_2i, hs_sub(s, hs_conjugate(s)));
  };

  auto line = std::make_shared<ExtensionView>();
  line->group = g;
  line->kline = k0;
  line->name = "involutory/k0-line";
  line->x = {{Series::one(FieldTag::Qi)}};
  line->rho_x = Series::one(FieldTag::Qi);
  line->m = QuadExt(1);
  line->rho = [fixed_part](const Element& e) { return fixed_part(e.parts[0]); };
  line->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
  line->in_tprime = [g](const Element& e) { return g->is_identity(e); };
  line->sample_tprime = [g](SampleRng&) { return g->identity(); };

  auto v = std::make_shared<ExtensionView>();
  v->group = g;
  v->kline = k0;
  v->name = "involutory";
  v->x = {{Series::constant(Coeff::imaginary_unit())}};
  v->rho_x = Series::one(FieldTag::Qi);
  v->m = QuadExt(1);
  v->rho = [anti_coordinate](const Element& e) { return anti_coordinate(e.parts[0]); };
  v->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
  v->in_tprime = [](const Element& e) { return hs_sigma_fixed(e.parts[0]); };
  v->sample_tprime = [k0](SampleRng& rng) { return k0->sample_element(rng); };
  v->sub = line;
  return v;
}

// Coordinate tower for vector carriers whose action is componentwise
// multiplication (quadratic and f4 groups); level j splits off the j-th
// coordinate line. Klines carry the per-coordinate exponent lattice.
ViewPtr make_coordinate_tower(const GroupPtr& g, const std::vector<GroupPtr>& klines,
                              const QuadExt& m, const std::string& base_name) {
  std::size_t dim = g->arity();
  ViewPtr below;
  for (std::size_t idx = dim; idx-- > 0;) {
    auto v = std::make_shared<ExtensionView>();
    v->group = g;
    v->kline = klines[idx];
    v->name = base_name + "/coordinate-" + std::to_string(idx);
    v->x = coordinate_unit(g, idx, Series::one(klines[idx]->scalar_field()));
    v->rho_x = Series::one(klines[idx]->scalar_field());
    v->m = m;
    v->rho = [idx](const Element& e) { return e.parts[idx]; };
    v->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
    if (idx + 1 == dim) {
      v->in_tprime = [g](const Element& e) { return g->is_identity(e); };
      v->sample_tprime = [g](SampleRng&) { return g->identity(); };
    } else {
      v->in_tprime = [idx](const Element& e) { return coords_vanish(e, idx); };
      v->sample_tprime = zeroed_sampler(g, idx);
      v->sub = below;
    }
    below = v;
  }
  return below;
}

ViewPtr make_quadratic_view(std::size_t dim) {
  auto g = make_quadratic_group(dim);
  auto kline = make_lattice_line_group(
      FieldTag::Q, "quadratic-k", ExpLattice{std::nullopt, Rational(0)},
      {QuadExt(make_rational(1, 4), Rational(0))});
  return make_coordinate_tower(g, std::vector<GroupPtr>(dim, kline), QuadExt(2),
                               g->id());
}

ViewPtr make_f4_view(bool first_of_pair) {
  auto g = make_f4_group(first_of_pair);
  ExpLattice latF = ExpLattice::plane(Rational(1), make_rational(1, 2));
  ExpLattice latK = ExpLattice::plane(make_rational(1, 2), make_rational(1, 2));
  auto lineF = make_lattice_line_group(
      FieldTag::F2, "f4-line-f", latF,
      {QuadExt(1), QuadExt(Rational(0), make_rational(1, 2))});
  auto lineK = make_lattice_line_group(
      FieldTag::F2, "f4-line-k", latK,
      {QuadExt(make_rational(1, 2), Rational(0)), QuadExt(Rational(0), make_rational(1, 2))});
  std::vector<GroupPtr> klines;
  for (int i = 0; i < 4; ++i) klines.push_back(first_of_pair ? lineF : lineK);
  klines.push_back(first_of_pair ? lineK : lineF);
  return make_coordinate_tower(g, klines, QuadExt(2), g->id());
}

// Pseudo-quadratic tower: coordinate levels over the u-vector, then the
// sigma-fixed t-line.
ViewPtr make_pseudo_quadratic_view(std::size_t dim) {
  auto g = make_pseudo_quadratic_group(dim);
  auto kline = make_triangle_group(FieldTag::Qi);
  auto k0 = make_involutory_group();

  // Base level: T' = {(0, t) : t sigma-fixed}, a K0-line with action
  // t . l = t l for sigma-fixed l (modulus 1).
  auto base = std::make_shared<ExtensionView>();
  base->group = g;
  base->kline = k0;
  base->name = g->id() + "/k0-line";
  base->x = coordinate_unit(g, dim, Series::one(FieldTag::Qi));
  base->rho_x = Series::one(FieldTag::Qi);
  base->m = QuadExt(1);
  base->rho = [dim](const Element& e) { return e.parts[dim]; };
  base->act = [g, dim](const Element& e, const Series& l) {
    Element out = e;
    out.parts[dim] = hs_mul(e.parts[dim], l);
    return out;
  };
  base->in_tprime = [g](const Element& e) { return g->is_identity(e); };
  base->sample_tprime = [g](SampleRng&) { return g->identity(); };

  ViewPtr below = base;
  for (std::size_t idx = dim; idx-- > 0;) {
    auto v = std::make_shared<ExtensionView>();
    v->group = g;
    v->kline = kline;
    v->name = g->id() + "/coordinate-" + std::to_string(idx);
    // x = (e_idx, q(e_idx)); rho(x) = 1.
    Element unit = g->identity();
    unit.parts[idx] = Series::one(FieldTag::Qi);
    unit.parts[dim] = pq_form(std::vector<Series>(unit.parts.begin(),
                                                  unit.parts.begin() + dim));
    v->x = unit;
    v->rho_x = Series::one(FieldTag::Qi);
    v->m = QuadExt(2);
    v->rho = [idx](const Element& e) { return e.parts[idx]; };
    v->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
    v->in_tprime = [idx](const Element& e) { return coords_vanish(e, idx); };
    v->sample_tprime = [g, idx, dim](SampleRng& rng) {
      Element e = g->sample_element(rng);
      bool changed = false;
      for (std::size_t i = 0; i <= idx; ++i) {
        if (!e.parts[i].is_zero()) changed = true;
        e.parts[i] = Series::zero(FieldTag::Qi);
      }
      if (changed) {
        // Restore the carrier constraint: t = q(u) + previous fixed part.
        std::vector<Series> u(e.parts.begin(), e.parts.begin() + dim);
        Coeff half = Coeff::complex(make_rational(1, 2), Rational(0));
        Series fixed = hs_scale(half, hs_add(e.parts[dim], hs_conjugate(e.parts[dim])));
        e.parts[dim] = hs_add(pq_form(u), fixed);
      }
      return e;
    };
    v->sub = below;
    below = v;
  }
  return below;
}

ViewPtr make_hexagon_view() {
  auto g = make_hexagon_group();
  auto kline = make_lattice_line_group(FieldTag::F3, "hexagon-f",
                                       ExpLattice::rational_multiples(Rational(1)),
                                       {QuadExt(1)});
  return make_coordinate_tower(g, std::vector<GroupPtr>(3, kline), QuadExt(3), g->id());
}

ViewPtr make_octagon_view() {
  auto g = make_octagon_group();
  auto kline = make_lattice_line_group(
      FieldTag::F2, "octagon-k", ExpLattice::all(),
      {QuadExt(make_rational(1, 2), Rational(0)), QuadExt(Rational(0), make_rational(1, 2))});

  // T' = {(0, u)}: omega((0,u)) = sqrt2 nu(u); the sub-line is
  // parametrized additively by the u coordinate.
  auto uline = std::make_shared<ExtensionView>();
  uline->group = g;
  uline->kline = kline;
  uline->name = "octagon/u-line";
  uline->x = {{Series::zero(FieldTag::F2), Series::one(FieldTag::F2)}};
  uline->rho_x = Series::one(FieldTag::F2);
  uline->m = QuadExt(Rational(0), Rational(1));  // sqrt2
  uline->rho = [](const Element& e) { return e.parts[1]; };
  uline->act = [](const Element& e, const Series& l) {
    return Element{{Series::zero(FieldTag::F2), hs_mul(e.parts[1], l)}};
  };
  uline->in_tprime = [g](const Element& e) { return g->is_identity(e); };
  uline->sample_tprime = [g](SampleRng&) { return g->identity(); };

  // Top level: the t coordinate is the quotient line, parametrized
  // additively (omega((t,0)) = (2 + sqrt2) nu(t)). The family's twisted
  // scalar action does not descend to a linear map on the quotient, so
  // the view carries its own line parametrization.
  auto v = std::make_shared<ExtensionView>();
  v->group = g;
  v->kline = kline;
  v->name = "octagon";
  v->x = {{Series::one(FieldTag::F2), Series::zero(FieldTag::F2)}};
  v->rho_x = Series::one(FieldTag::F2);
  v->m = QuadExt(Rational(2), Rational(1));  // 2 + sqrt2
  v->rho = [](const Element& e) { return e.parts[0]; };
  v->act = [](const Element& e, const Series& l) {
    return Element{{hs_mul(e.parts[0], l), Series::zero(FieldTag::F2)}};
  };
  v->in_tprime = [](const Element& e) { return e.parts[0].is_zero(); };
  v->sample_tprime = [g](SampleRng& rng) {
    Element e = g->sample_element(rng);
    e.parts[0] = Series::zero(FieldTag::F2);
    return e;
  };
  v->sub = uline;
  return v;
}

// Indifferent carrier as a two-dimensional space over the squares: the
// even-exponent part is the K^2-line spanned by 1, the odd-exponent part
// the K^2-line spanned by t.
ViewPtr make_indifferent_view() {
  auto g = make_indifferent_group();
  auto ksq = make_lattice_line_group(FieldTag::F2, "indifferent-ksq",
                                     ExpLattice::rational_multiples(make_rational(2)),
                                     {QuadExt(2)});

  auto even_part = [](const Series& s) {
    std::vector<Series::Term> keep;
    for (const auto& t : s.terms()) {
      Rational half = t.exp.a / 2;
      if (t.exp.b == 0 && half.get_den() == 1) keep.push_back(t);
    }
    return Series::from_terms(FieldTag::F2, std::move(keep));
  };
  auto odd_part = [even_part](const Series& s) { return hs_sub(s, even_part(s)); };

  auto tline = std::make_shared<ExtensionView>();
  tline->group = g;
  tline->kline = ksq;
  tline->name = "indifferent/t-line";
  tline->x = {{Series::monomial(QuadExt(1), Coeff::one(FieldTag::F2))}};
  tline->rho_x = Series::one(FieldTag::F2);
  tline->m = QuadExt(1);
  tline->rho = [odd_part](const Element& e) {
    // K^2 coordinate along t.
    return hs_shift(odd_part(e.parts[0]), QuadExt(-1));
  };
  tline->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
  tline->in_tprime = [g](const Element& e) { return g->is_identity(e); };
  tline->sample_tprime = [g](SampleRng&) { return g->identity(); };

  auto v = std::make_shared<ExtensionView>();
  v->group = g;
  v->kline = ksq;
  v->name = "indifferent";
  v->x = {{Series::one(FieldTag::F2)}};
  v->rho_x = Series::one(FieldTag::F2);
  v->m = QuadExt(1);
  v->rho = [even_part](const Element& e) { return even_part(e.parts[0]); };
  v->act = [g](const Element& e, const Series& l) { return g->odot(e, l); };
  v->in_tprime = [even_part](const Element& e) {
    return even_part(e.parts[0]).is_zero();
  };
  v->sample_tprime = [g, odd_part](SampleRng& rng) {
    Element e = g->sample_element(rng);
    e.parts[0] = odd_part(e.parts[0]);
    return e;
  };
  v->sub = tline;
  return v;
}

}  // namespace

ViewPtr make_extension_view(const std::string& family_id, std::size_t dimension) {
  if (family_id == "triangle") return make_triangle_view(FieldTag::Q);
  if (family_id == "involutory") return make_involutory_view();
  if (family_id == "quadratic")
    return make_quadratic_view(dimension == 0 ? 3 : dimension);
  if (family_id == "pseudo-quadratic")
    return make_pseudo_quadratic_view(dimension == 0 ? 1 : dimension);
  if (family_id == "indifferent") return make_indifferent_view();
  if (family_id == "hexagon") return make_hexagon_view();
  if (family_id == "octagon") return make_octagon_view();
  if (family_id == "f4-a") return make_f4_view(true);
  if (family_id == "f4-b") return make_f4_view(false);
  throw std::invalid_argument("no extension view for family '" + family_id + "'");
}

}  // namespace nonarch
