#include "nonarch/completeness.hpp"

#include <stdexcept>

#include "nonarch/errors.hpp"
#include "nonarch/families.hpp"

namespace nonarch {

IndependenceResult is_independent(const ExtensionView& view, const Element& x,
                                  std::size_t samples, std::uint64_t seed) {
  const OmegaGroup& g = *view.group;
  if (g.is_identity(x)) throw std::invalid_argument("independence is defined for x != 0");

  auto violates = [&](const Element& y) {
    Level expect = min(g.omega(x), g.omega(y));
    return g.omega(g.oplus(x, y)) != expect;
  };

  if (view.in_tprime(x)) {
    // x + (-x) = 0 has omega infinity, never the finite min.
    return {false, g.neg(x)};
  }
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng = per_sample_rng(seed, i);
    Element y = view.sample_tprime(rng);
    if (violates(y)) return {false, y};
    // Scalar transport: x . l must satisfy the same identity.
    if (i % 8 == 0) {
      Series l = view.kline->sample_scalar(rng);
      Element xl = view.act(x, l);
      Element y2 = view.sample_tprime(rng);
      if (!g.is_identity(xl)) {
        Level expect = min(g.omega(xl), g.omega(y2));
        if (g.omega(g.oplus(xl, y2)) != expect) return {false, y2};
      }
    }
  }
  return {true, std::nullopt};
}

Element nearest_tprime_point(const ExtensionView& view, const Element& x) {
  return view.decompose(x).y;
}

Element make_independent(const ExtensionView& view, const Element& x) {
  if (view.in_tprime(x)) throw InputInSubgroup("element already lies in T'");
  Element z = nearest_tprime_point(view, x);
  return view.group->oplus(x, view.group->neg(z));
}

Ball project_ball(const ExtensionView& view, const Ball& b) {
  if (b.kind != BallKind::Closed)
    throw std::invalid_argument("ball projection is defined for closed balls");
  Level omega_x = view.group->omega(view.x);
  Level nu_rho_x = view.rho_x.valuation();
  // level' = (level - omega(x)) / m + nu(rho(x)).
  QuadExt level = quadext_div(b.level - omega_x.value(), view.m) + nu_rho_x.value();
  Ball out;
  out.center = {{view.rho(b.center)}};
  out.level = level;
  out.kind = BallKind::Closed;
  return out;
}

Element lift_point(const ExtensionView& view, const Series& target, const Ball& b) {
  Ball image = project_ball(view, b);
  Element target_elt{{target}};
  if (!ball_contains(*view.kline, image, target_elt))
    throw TargetOutsideImage("lift target escapes the projected ball");
  // Left-translate the center by x . delta with rho(x . delta) closing the
  // gap to the target. The distance to the center is then exactly
  // omega(x) + m nu(delta), the equality case of the projection bound, so
  // membership reduces to the target lying in the image ball.
  Series gap = hs_sub(target, view.rho(b.center));
  const auto& lead = view.rho_x.leading();
  Series delta = hs_mul(gap, Series::monomial(-lead.exp, coeff_inv(lead.coeff)));
  return view.group->oplus(view.apply_x(delta), b.center);
}

namespace {

Element solve_rec(const ExtensionView& view, const BallChain& chain,
                  std::size_t depth_left, std::vector<SolveStage>& stages) {
  if (depth_left == 0)
    throw std::runtime_error("chain solver exceeded its recursion budget");
  const OmegaGroup& g = *view.group;

  SolveStage stage;
  stage.view_name = view.name;
  for (const auto& b : chain) stage.projected.push_back(project_ball(view, b));
  if (!chain_is_nested(*view.kline, stage.projected))
    throw std::logic_error("projected chain lost nesting");

  // A common point of the projected chain: the smallest image ball's
  // center (the scalar line stands in for a spherically complete field).
  Series l_star = stage.projected.back().center.parts[0];
  stage.chosen_k_point = l_star;

  // z with rho(z) = l_star; right-translation by -z is a self-isometry.
  const auto& lead = view.rho_x.leading();
  Series l_z = l_star.is_zero()
                   ? l_star
                   : hs_mul(l_star, Series::monomial(-lead.exp, coeff_inv(lead.coeff)));
  Element z = view.apply_x(l_z);
  stage.translation = z;
  stages.push_back(stage);

  Element neg_z = g.neg(z);
  BallChain translated;
  translated.reserve(chain.size());
  for (const auto& b : chain) {
    translated.push_back(Ball{g.oplus(b.center, neg_z), b.level, b.kind});
  }

  // Every translated ball projects onto a ball through 0, so it contains
  // its center's T' component; recenter there.
  BallChain in_tprime;
  for (const auto& b : translated) {
    Element y = view.decompose(b.center).y;
    if (!ball_contains(g, b, y))
      throw std::logic_error("T' representative escaped its ball");
    if (!view.in_tprime(y)) throw std::logic_error("decomposition left T'");
    in_tprime.push_back(recenter(g, b, y));
  }

  Element w;
  if (!view.sub) {
    // T' trivial: each recentered ball contains the identity.
    w = g.identity();
    for (const auto& b : in_tprime) {
      if (!ball_contains(g, b, w))
        throw std::logic_error("trivial T' ball misses the identity");
    }
  } else {
    if (!chain_is_nested(g, in_tprime))
      throw std::logic_error("recentered chain lost nesting");
    w = solve_rec(*view.sub, in_tprime, depth_left - 1, stages);
  }
  return g.oplus(w, z);
}

}  // namespace

SolveResult solve_chain(const ExtensionView& view, const BallChain& chain,
                        std::size_t recursion_depth) {
  if (chain.empty()) throw EmptyChain("chain has no balls");
  for (const auto& b : chain) {
    if (b.kind != BallKind::Closed)
      throw std::invalid_argument("chain solving is defined for closed balls");
  }
  if (!chain_is_nested(*view.group, chain)) throw ChainNotNested("balls are not nested");

  SolveResult result;
  result.oracle = chain.back().center;
  result.solution = solve_rec(view, chain, recursion_depth, result.stages);
  return result;
}

Json solve_trace_json(const std::string& family, const SolveResult& r) {
  Json stages = Json::array();
  int index = 0;
  for (const auto& s : r.stages) {
    Json projected = Json::array();
    for (const auto& b : s.projected) projected.push_back(ball_to_json("k-line", b));
    stages.push_back(Json{{"stage", index++},
                          {"view", s.view_name},
                          {"projected_chain", projected},
                          {"chosen_K_point", series_to_json(s.chosen_k_point)},
                          {"translation", element_to_json(family, s.translation)}});
  }
  return Json{{"stages", stages},
              {"solution", element_to_json(family, r.solution)},
              {"oracle", element_to_json(family, r.oracle)}};
}

SigmaSplit sigma_split(const Series& x, const std::function<Series(const Series&)>& sigma) {
  Coeff half = Coeff::zero(x.field());
  switch (x.field()) {
    case FieldTag::F2:
      throw CharacteristicTwo("sigma splitting needs 2 invertible in the coefficients");
    case FieldTag::F3:
      half = Coeff::gf(FieldTag::F3, 2);  // 1/2 = 2 mod 3
      break;
    case FieldTag::Q:
      half = Coeff::rational(make_rational(1, 2));
      break;
    case FieldTag::Qi:
      half = Coeff::complex(make_rational(1, 2), Rational(0));
      break;
  }
  Series sx = sigma(x);
  return {hs_scale(half, hs_add(x, sx)), hs_scale(half, hs_sub(x, sx))};
}

SigmaSplit sigma_split_conj(const Series& x) {
  if (x.field() == FieldTag::F2)
    throw CharacteristicTwo("sigma splitting needs 2 invertible in the coefficients");
  return sigma_split(x, [](const Series& s) { return hs_conjugate(s); });
}

ProductMetricReport product_metric_check(const OmegaGroup& g, const PairSampler& u_sampler,
                                         const PairSampler& w_sampler, std::size_t samples,
                                         std::uint64_t seed) {
  ProductMetricReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    SampleRng rng = per_sample_rng(seed, i);
    Element u = u_sampler.sample(rng);
    Element u2 = u_sampler.sample(rng);
    Element w = w_sampler.sample(rng);
    Element w2 = w_sampler.sample(rng);
    Level lhs = distance_level(g, g.oplus(u, w), g.oplus(u2, w2));
    Level rhs = min(distance_level(g, u, u2), distance_level(g, w, w2));
    if (lhs != rhs) {
      ++report.violations;
      if (report.first_witness.is_null()) {
        report.first_witness = Json{{"sample", i},
                                    {"u", element_to_json(g.id(), u)},
                                    {"u2", element_to_json(g.id(), u2)},
                                    {"w", element_to_json(g.id(), w)},
                                    {"w2", element_to_json(g.id(), w2)},
                                    {"lhs", lhs.to_string()},
                                    {"rhs", rhs.to_string()}};
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Counterexample data.

namespace {

// 1 - 2^-k as an exact rational.
Rational one_minus_half_pow(std::size_t k) {
  mpz_class den = mpz_class(1) << k;
  return make_rational(den - 1, den);
}

}  // namespace

Element counterexample_center(std::size_t i) {
  Element e;
  e.parts.push_back(Series::one(FieldTag::Q));
  for (std::size_t k = 1; k <= i; ++k) {
    e.parts.push_back(Series::monomial(QuadExt(one_minus_half_pow(k), Rational(0)),
                                       Coeff::one(FieldTag::Q)));
  }
  return e;
}

QuadExt counterexample_level(std::size_t i) {
  return QuadExt(2 * one_minus_half_pow(i + 1), Rational(0));
}

GroupPtr counterexample_space(std::size_t dim) { return make_quadratic_group(dim); }

Ball counterexample_ball(std::size_t i, std::size_t dim) {
  Element c = counterexample_center(i);
  if (c.parts.size() > dim)
    throw std::invalid_argument("counterexample ball needs a larger ambient dimension");
  while (c.parts.size() < dim) c.parts.push_back(Series::zero(FieldTag::Q));
  return Ball{std::move(c), counterexample_level(i), BallKind::Closed};
}

Refutation refute_candidate(const Element& candidate) {
  for (const auto& p : candidate.parts) {
    if (p.field() != FieldTag::Q)
      throw TagMismatch("counterexample candidates live over Q");
  }
  std::size_t j = candidate.parts.size();
  for (std::size_t k = 0; k < candidate.parts.size(); ++k) {
    if (candidate.parts[k].is_zero()) {
      j = k;
      break;
    }
  }

  Element xj = counterexample_center(j);
  std::size_t dim = std::max(xj.parts.size(), candidate.parts.size());
  auto coord = [dim](const Element& e, std::size_t k) {
    return k < e.parts.size() ? e.parts[k] : Series::zero(FieldTag::Q);
  };
  // omega(x_j - c) through the all-ones form, computed exactly.
  Series qsum = Series::zero(FieldTag::Q);
  for (std::size_t k = 0; k < dim; ++k) {
    Series d = hs_sub(coord(xj, k), coord(candidate, k));
    qsum = hs_add(qsum, hs_mul(d, d));
  }

  Refutation r;
  r.j = j;
  r.level_found = qsum.valuation();
  r.level_bound = QuadExt(2 * one_minus_half_pow(j), Rational(0));
  r.level_required = counterexample_level(j);
  return r;
}

}  // namespace nonarch
