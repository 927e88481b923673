#include "nonarch/ball.hpp"

#include "nonarch/errors.hpp"

namespace nonarch {

Level distance_level(const OmegaGroup& g, const Element& x, const Element& y) {
  return g.omega(g.oplus(x, g.neg(y)));
}

Element sample_delta_at_least(const OmegaGroup& g, SampleRng& rng, const QuadExt& level) {
  Element d = g.identity();
  for (int tries = 0; tries < 64 && g.is_identity(d); ++tries) d = g.sample_element(rng);
  if (g.is_identity(d)) throw std::runtime_error("sampler produced only identities");
  Level om = g.omega(d);
  // omega(d . t^e) = omega(d) + m*e; pick e in the scalar lattice with the
  // result at or above the requested level.
  QuadExt gap = quadext_div(level - om.value(), g.modulus());
  QuadExt e = g.scalar_lattice().ceil_at_least(gap);
  return g.odot(d, g.scalar_monomial(e));
}

const char* ball_relation_name(BallRelation r) {
  switch (r) {
    case BallRelation::Disjoint: return "disjoint";
    case BallRelation::FirstInsideSecond: return "first-inside-second";
    case BallRelation::SecondInsideFirst: return "second-inside-first";
    case BallRelation::Equal: return "equal";
  }
  return "?";
}

bool ball_contains(const OmegaGroup& g, const Ball& b, const Element& p) {
  Level d = distance_level(g, b.center, p);
  if (b.kind == BallKind::Closed) return d >= Level::finite(b.level);
  return d > Level::finite(b.level);
}

namespace {

// Point-set containment of b1 in b2 given that b1's center lies in b2,
// decided on levels and kinds (larger level = smaller ball).
bool size_fits_inside(const Ball& b1, const Ball& b2) {
  if (b2.level < b1.level) return true;
  if (b1.level < b2.level) return false;
  // Equal levels: only closed-inside-open fails.
  return !(b1.kind == BallKind::Closed && b2.kind == BallKind::Open);
}

}  // namespace

BallRelation ball_compare(const OmegaGroup& g, const Ball& b1, const Ball& b2) {
  bool c1_in_2 = ball_contains(g, b2, b1.center);
  bool c2_in_1 = ball_contains(g, b1, b2.center);
  if (!c1_in_2 && !c2_in_1) return BallRelation::Disjoint;
  bool first_inside = c1_in_2 && size_fits_inside(b1, b2);
  bool second_inside = c2_in_1 && size_fits_inside(b2, b1);
  if (first_inside && second_inside) return BallRelation::Equal;
  if (first_inside) return BallRelation::FirstInsideSecond;
  if (second_inside) return BallRelation::SecondInsideFirst;
  // Intersecting balls are nested (ultrametric); reaching here means the
  // smaller ball's center escaped the larger one, which cannot happen.
  return BallRelation::Disjoint;
}

Ball recenter(const OmegaGroup& g, const Ball& b, const Element& p) {
  if (!ball_contains(g, b, p)) throw NotAMember("recenter target outside the ball");
  return Ball{p, b.level, b.kind};
}

bool chain_is_nested(const OmegaGroup& g, const BallChain& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    BallRelation r = ball_compare(g, chain[i], chain[i + 1]);
    if (r != BallRelation::SecondInsideFirst && r != BallRelation::Equal) return false;
  }
  return true;
}

Element sample_point_in_ball(const OmegaGroup& g, const Ball& b, SampleRng& rng,
                             bool on_boundary) {
  if (!on_boundary && rng.bounded(5) == 0) return b.center;
  Element delta = sample_delta_at_least(g, rng, b.level);
  // One positive lattice step of the scalar exponent; pushes omega up by
  // m * step.
  QuadExt step = g.scalar_lattice().ceil_at_least(QuadExt(1));
  if (!on_boundary) {
    for (long extra = rng.int_range(0, 2); extra > 0; --extra) {
      delta = g.odot(delta, g.scalar_monomial(step));
    }
  }
  if (b.kind == BallKind::Open) {
    while (!(g.omega(delta) > Level::finite(b.level))) {
      delta = g.odot(delta, g.scalar_monomial(step));
    }
  }
  return g.oplus(delta, b.center);
}

}  // namespace nonarch
