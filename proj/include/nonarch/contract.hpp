#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/lattice.hpp"
#include "nonarch/rng.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

// Carrier element of a root-group family. The layout of `parts` is owned
// by the family: a single series for field-like carriers, coordinates for
// vector carriers, (u..., t) for pseudo-quadratic pairs, (t, u) for
// octagon pairs, (x, y, z) for hexagon triples.
struct Element {
  std::vector<Series> parts;

  friend bool operator==(const Element& x, const Element& y) {
    return x.parts == y.parts;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }
};

// Group with a valuation-like map omega and (optionally) a right scalar
// action of modulus m:
//   (1) omega(x) = infinity  iff  x = identity
//   (2) omega(x . l) = omega(x) + m * nu(l)
//   (3) omega(-x) = omega(x), omega(x + y) >= min(omega(x), omega(y))
// All implementations are immutable after construction and all operations
// are pure, so instances are safe to share across threads.
class OmegaGroup {
 public:
  virtual ~OmegaGroup() = default;

  virtual std::string id() const = 0;
  virtual std::string describe() const = 0;
  virtual std::size_t arity() const = 0;

  virtual Element identity() const = 0;
  virtual Element oplus(const Element& x, const Element& y) const = 0;
  virtual Element neg(const Element& x) const = 0;
  virtual Level omega(const Element& x) const = 0;

  virtual bool has_action() const = 0;
  // Modulus m of the scalar action (only meaningful when has_action()).
  virtual QuadExt modulus() const = 0;
  virtual FieldTag scalar_field() const = 0;
  virtual Element odot(const Element& x, const Series& k) const = 0;
  // Whether the action accepts the zero scalar (x . 0 = identity).
  virtual bool scalar_zero_ok() const { return true; }
  // Exponent lattice the scalar field draws monomials from.
  virtual ExpLattice scalar_lattice() const { return ExpLattice::all(); }

  // Canonical epimorphism onto the scalar line modulo the distinguished
  // normal subgroup, when the family has one (rho(x . l) = rho(x) * l).
  virtual std::optional<Series> rho(const Element&) const { return std::nullopt; }

  // Validates layout and carrier constraints; throws CarrierViolation or
  // TagMismatch. Families construct elements through this.
  virtual void check_element(const Element& x) const = 0;

  virtual Element sample_element(SampleRng& rng) const = 0;
  // Nonzero scalar sample (monomial where exactness demands it).
  virtual Series sample_scalar(SampleRng& rng) const = 0;

  Series scalar_one() const { return Series::one(scalar_field()); }
  Series scalar_monomial(const QuadExt& e) const {
    return Series::monomial(e, Coeff::one(scalar_field()));
  }
  bool is_identity(const Element& x) const { return x == identity(); }
};

using GroupPtr = std::shared_ptr<const OmegaGroup>;

// omega(x - y): the log-space distance (larger level = closer points).
Level distance_level(const OmegaGroup& g, const Element& x, const Element& y);

// A nonidentity element delta with omega(delta) >= level, constructed by
// scaling a sampled element with a scalar monomial; exact by construction.
Element sample_delta_at_least(const OmegaGroup& g, SampleRng& rng, const QuadExt& level);

}  // namespace nonarch
