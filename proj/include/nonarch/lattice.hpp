#pragma once

#include <optional>

#include "nonarch/quadext.hpp"

namespace nonarch {

// Additive subgroup of Q + Q*sqrt2 used to constrain exponents of carrier
// series. Each component is either unconstrained, forced to zero, or
// restricted to integer multiples of a positive step.
struct ExpLattice {
  // nullopt: component unconstrained; 0: component must vanish;
  // r > 0: component must be an integer multiple of r.
  std::optional<Rational> a_step;
  std::optional<Rational> b_step;

  static ExpLattice all() { return {std::nullopt, std::nullopt}; }
  // r*Z, no sqrt(2) part.
  static ExpLattice rational_multiples(Rational r) {
    return {std::move(r), Rational(0)};
  }
  // ra*Z + rb*sqrt(2)*Z.
  static ExpLattice plane(Rational ra, Rational rb) {
    return {std::move(ra), std::move(rb)};
  }

  bool contains(const QuadExt& e) const;

  // Smallest-ish lattice element >= x (componentwise ceiling; exact).
  QuadExt ceil_at_least(const QuadExt& x) const;
};

}  // namespace nonarch
