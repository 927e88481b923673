#pragma once

#include <vector>

#include "nonarch/contract.hpp"

namespace nonarch {

enum class BallKind { Open, Closed };

// Ball in the ultrametric d = 2^-omega. Membership is a level comparison:
// closed demands distance_level >= level, open demands strict.
struct Ball {
  Element center;
  QuadExt level;
  BallKind kind = BallKind::Closed;
};

enum class BallRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Equal };

const char* ball_relation_name(BallRelation r);

bool ball_contains(const OmegaGroup& g, const Ball& b, const Element& p);

// Ultrametric dichotomy: intersecting balls are nested. At equal level,
// equal kind and intersecting centers the balls are equal as point sets;
// an open ball sits inside the closed ball of the same level and center.
BallRelation ball_compare(const OmegaGroup& g, const Ball& b1, const Ball& b2);

// Same ball with a new center chosen among its points (every point of an
// ultrametric ball is a center). Throws NotAMember.
Ball recenter(const OmegaGroup& g, const Ball& b, const Element& p);

using BallChain = std::vector<Ball>;

// Each ball contains the next.
bool chain_is_nested(const OmegaGroup& g, const BallChain& chain);

// A point of b: center translated by a delta of sufficient level. With
// on_boundary the delta sits exactly at the ball level (only meaningful
// for closed balls).
Element sample_point_in_ball(const OmegaGroup& g, const Ball& b, SampleRng& rng,
                             bool on_boundary = false);

}  // namespace nonarch
