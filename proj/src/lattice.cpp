#include "nonarch/lattice.hpp"

#include <stdexcept>

namespace nonarch {

namespace {

bool component_ok(const std::optional<Rational>& step, const Rational& v) {
  if (!step) return true;
  if (*step == 0) return v == 0;
  Rational q = v / *step;
  return q.get_den() == 1;
}

// Smallest multiple of step >= v. step == 0 demands v <= 0 and yields 0.
Rational component_ceil(const std::optional<Rational>& step, const Rational& v) {
  if (!step) return v;
  if (*step == 0) {
    if (v > 0) throw std::logic_error("lattice component pinned to zero cannot reach target");
    return Rational(0);
  }
  Rational q = v / *step;
  mpz_class c = -floor_rational(-q);
  return Rational(c) * *step;
}

}  // namespace

bool ExpLattice::contains(const QuadExt& e) const {
  return component_ok(a_step, e.a) && component_ok(b_step, e.b);
}

QuadExt ExpLattice::ceil_at_least(const QuadExt& x) const {
  // Componentwise dominance implies dominance of the real value since
  // sqrt(2) > 0.
  return {component_ceil(a_step, x.a), component_ceil(b_step, x.b)};
}

}  // namespace nonarch
