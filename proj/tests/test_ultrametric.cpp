#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonarch/errors.hpp"
#include "nonarch/families.hpp"
#include "nonarch/validate.hpp"
#include "oracles.hpp"

using namespace nonarch;

namespace {

QuadExt qe(long num, long den = 1) { return QuadExt(make_rational(num, den), Rational(0)); }

Element scalar_elt(long num, long den, long c = 1) {
  return {{Series::monomial(QuadExt(make_rational(num, den), Rational(0)),
                            Coeff::rational(make_rational(c)))}};
}

}  // namespace

TEST_CASE("distance levels in the triangle group") {
  auto g = make_triangle_group(FieldTag::Q);
  Element th = scalar_elt(1, 2);  // t^(1/2)
  Element t = scalar_elt(1, 1);   // t
  CHECK(distance_level(*g, th, t) == Level::finite(qe(1, 2)));
  CHECK(distance_level(*g, th, th).is_infinite());
  CHECK(distance_level(*g, t, g->identity()) == g->omega(t));

  SampleRng rng(31);
  for (int i = 0; i < 200; ++i) {
    Element x = g->sample_element(rng), y = g->sample_element(rng);
    CHECK(distance_level(*g, x, y) == distance_level(*g, y, x));
  }
}

TEST_CASE("strong triangle inequality in log space, several families") {
  for (const char* id : {"triangle", "quadratic", "octagon", "hexagon", "pseudo-quadratic"}) {
    GroupPtr g = make_family(id);
    SampleRng rng(32);
    for (int i = 0; i < 150; ++i) {
      Element x = g->sample_element(rng);
      Element y = g->sample_element(rng);
      Element z = g->sample_element(rng);
      Level xz = distance_level(*g, x, z);
      CHECK(xz >= min(distance_level(*g, x, y), distance_level(*g, y, z)));
    }
  }
}

TEST_CASE("ball membership: frozen examples") {
  auto g = make_triangle_group(FieldTag::Q);
  Ball closed1{g->identity(), qe(1), BallKind::Closed};
  CHECK(ball_contains(*g, closed1, closed1.center));
  CHECK(ball_contains(*g, closed1, scalar_elt(1, 1)));        // nu = 1
  CHECK_FALSE(ball_contains(*g, closed1, scalar_elt(1, 2)));  // nu = 1/2
  Ball open1{g->identity(), qe(1), BallKind::Open};
  CHECK_FALSE(ball_contains(*g, open1, scalar_elt(1, 1)));
  CHECK(ball_contains(*g, open1, scalar_elt(2, 1)));
}

TEST_CASE("ball comparison: frozen examples") {
  auto g = make_triangle_group(FieldTag::Q);
  Ball b{g->identity(), qe(1), BallKind::Closed};
  CHECK(ball_compare(*g, b, b) == BallRelation::Equal);

  Ball smaller{g->identity(), qe(1), BallKind::Closed};
  Ball larger{g->identity(), qe(1, 2), BallKind::Closed};
  CHECK(ball_compare(*g, smaller, larger) == BallRelation::FirstInsideSecond);
  CHECK(ball_compare(*g, larger, smaller) == BallRelation::SecondInsideFirst);

  // Constants 0 and 1 sit at distance level 0 < 1: disjoint.
  Element zero = g->identity();
  Element one = {{Series::one(FieldTag::Q)}};
  Ball at0{zero, qe(1), BallKind::Closed};
  Ball at1{one, qe(1), BallKind::Closed};
  CHECK(ball_compare(*g, at0, at1) == BallRelation::Disjoint);

  // Open inside closed at the same level and center.
  Ball open_b{g->identity(), qe(1), BallKind::Open};
  CHECK(ball_compare(*g, open_b, b) == BallRelation::FirstInsideSecond);
  CHECK(ball_compare(*g, b, open_b) == BallRelation::SecondInsideFirst);
}

TEST_CASE("ball comparison agrees with membership sampling") {
  for (const char* id : {"triangle", "quadratic", "octagon"}) {
    GroupPtr g = make_family(id);
    SampleRng rng(33);
    for (int i = 0; i < 60; ++i) {
      Element c1 = g->sample_element(rng);
      Element c2 = rng.coin() ? g->sample_element(rng) : c1;
      Element probe = g->identity();
      for (int tries = 0; tries < 32 && g->is_identity(probe); ++tries)
        probe = g->sample_element(rng);
      QuadExt l1 = g->omega(probe).value();
      QuadExt l2 = l1;
      QuadExt step = g->modulus() * g->scalar_lattice().ceil_at_least(QuadExt(1));
      for (long k = rng.int_range(-1, 1); k > 0; --k) l2 = l2 + step;
      for (long k = rng.int_range(0, 1); k > 0; --k) l1 = l1 + step;
      Ball b1{c1, l1, rng.coin() ? BallKind::Closed : BallKind::Open};
      Ball b2{c2, l2, rng.coin() ? BallKind::Closed : BallKind::Open};
      BallRelation claim = ball_compare(*g, b1, b2);
      auto points = oracle::probe_points(*g, b1, b2, rng);
      CHECK(oracle::relation_consistent(*g, b1, b2, claim, points));
    }
  }
}

TEST_CASE("recentering preserves membership") {
  auto g = make_quadratic_group(3);
  SampleRng rng(34);
  for (int i = 0; i < 40; ++i) {
    Element center = g->sample_element(rng);
    Element probe = g->identity();
    for (int tries = 0; tries < 32 && g->is_identity(probe); ++tries)
      probe = g->sample_element(rng);
    Ball b{center, g->omega(probe).value(), rng.coin() ? BallKind::Closed : BallKind::Open};
    CHECK(recenter(*g, b, b.center).center == b.center);
    Element p = sample_point_in_ball(*g, b, rng);
    Ball moved = recenter(*g, b, p);
    for (int k = 0; k < 10; ++k) {
      Element q = sample_point_in_ball(*g, rng.coin() ? b : moved, rng);
      CHECK(ball_contains(*g, b, q) == ball_contains(*g, moved, q));
    }
  }
  Ball tight{g->identity(), qe(0), BallKind::Closed};
  Element outside = {{Series::monomial(qe(-1), Coeff::rational(Rational(1))),
                      Series::zero(FieldTag::Q), Series::zero(FieldTag::Q)}};
  CHECK_THROWS_AS(recenter(*g, tight, outside), NotAMember);
}

TEST_CASE("law suite: clean families validate, a planted fault is caught") {
  auto triangle = make_triangle_group(FieldTag::Q);
  ValidationReport r = validate_omega_group(*triangle, 500, 7);
  CHECK(r.ok());
  CHECK(r.total_violations() == 0);

  auto octagon = make_octagon_group();
  ValidationReport oct = validate_omega_group(*octagon, 200, 7);
  CHECK(oct.ok());
  CHECK(octagon->modulus() == QuadExt(Rational(0), Rational(1)));

  auto corrupted = make_corrupted_group(triangle);
  ValidationReport bad = validate_omega_group(*corrupted, 200, 7);
  CHECK_FALSE(bad.ok());
  bool condition3_hit = false;
  for (const auto& law : bad.laws) {
    if (law.law == "condition3/omega-neg" && law.violations > 0) {
      condition3_hit = true;
      CHECK_FALSE(law.first_witness.is_null());
    }
  }
  CHECK(condition3_hit);
}

TEST_CASE("serial and parallel engines produce identical reports") {
  for (const char* id : {"triangle", "octagon", "pseudo-quadratic"}) {
    GroupPtr g = make_family(id);
    Json serial = validate_omega_group(*g, 120, 99, Engine::Serial).to_json();
    Json parallel = validate_omega_group(*g, 120, 99, Engine::Parallel).to_json();
    serial["engine"] = "-";
    parallel["engine"] = "-";
    CHECK(serial.dump() == parallel.dump());
  }
  // Same engine twice: byte-identical.
  GroupPtr g = make_family("quadratic");
  CHECK(validate_omega_group(*g, 80, 5).to_json().dump() ==
        validate_omega_group(*g, 80, 5).to_json().dump());
}

TEST_CASE("chain nesting check") {
  auto g = make_triangle_group(FieldTag::Q);
  BallChain good{{g->identity(), qe(0), BallKind::Closed},
                 {g->identity(), qe(1), BallKind::Closed},
                 {g->identity(), qe(2), BallKind::Closed}};
  CHECK(chain_is_nested(*g, good));
  BallChain bad{{g->identity(), qe(2), BallKind::Closed},
                {g->identity(), qe(1), BallKind::Closed}};
  CHECK_FALSE(chain_is_nested(*g, bad));
}
