#pragma once

#include <functional>
#include <vector>

#include "nonarch/contract.hpp"
#include "nonarch/validate.hpp"

namespace nonarch {

// Plugin data for the exceptional extension shape: group law
// (a,s) + (b,t) = (a+b, s+t+g(a,b)), omega((a,t)) = nu(q(pi(a)) + t),
// action (a,t) . s = (s*a, s^2*t) with a declared modulus. Construction
// validates the declared laws on a sample budget and rejects instances
// that fail.
struct ExceptionalData {
  std::string name = "exceptional";
  std::size_t dim = 1;
  FieldTag field = FieldTag::Q;
  QuadExt declared_m = QuadExt(4);
  std::function<Series(const std::vector<Series>&, const std::vector<Series>&)> g;
  std::function<std::vector<Series>(const std::vector<Series>&)> pi;
  std::function<Series(const std::vector<Series>&)> q;

  static ExceptionalData degenerate(QuadExt declared_m);  // g = 0, pi = 0
};

struct FamilyParams {
  FieldTag field = FieldTag::Q;   // triangle coefficient field
  std::size_t dimension = 0;      // quadratic / pseudo-quadratic (0 = default)
  std::size_t validation_samples = 64;  // construction budget (exceptional, f4)
  std::uint64_t validation_seed = 17;
  ExceptionalData exceptional;
};

// Families by id: "triangle", "involutory", "quadratic", "indifferent",
// "pseudo-quadratic", "exceptional-degenerate", "exceptional-line",
// "hexagon", "octagon", "f4-a", "f4-b", "corrupted-triangle".
// Throws ValidationFailed when a validated construction is rejected and
// std::invalid_argument for unknown ids.
GroupPtr make_family(const std::string& id, const FamilyParams& params = {});

std::vector<std::string> family_ids();

// Direct constructors for programmatic use.
GroupPtr make_triangle_group(FieldTag tag);
// Triangle-type group restricted to an exponent lattice (its scalar line
// and sampler stay inside the lattice as well).
GroupPtr make_lattice_line_group(FieldTag tag, std::string id, ExpLattice lattice,
                                 std::vector<QuadExt> pool_steps);
GroupPtr make_involutory_group();
GroupPtr make_quadratic_group(std::size_t dim);
GroupPtr make_indifferent_group();
GroupPtr make_pseudo_quadratic_group(std::size_t dim);
GroupPtr make_hexagon_group();
GroupPtr make_octagon_group();
// Generic diagonal quadratic-form group: per-coordinate carrier lattices
// and monomial form coefficients over GF(2)/Q; used by the F4 pair.
GroupPtr make_diagonal_form_group(std::string id, FieldTag tag,
                                  std::vector<QuadExt> form_exponents,
                                  std::vector<ExpLattice> carriers,
                                  ExpLattice scalar_lattice,
                                  std::vector<QuadExt> sample_pool_steps);
GroupPtr make_f4_group(bool first_of_pair);
GroupPtr make_exceptional_group(const ExceptionalData& data,
                                std::size_t validation_samples,
                                std::uint64_t validation_seed);

// Pseudo-quadratic form data (sigma = coefficientwise conjugation):
// q(u) = (i/2) sum conj(u_j) u_j, f(u,v) = i sum conj(u_j) v_j.
Series pq_form(const std::vector<Series>& u);
Series pq_skew_form(const std::vector<Series>& u, const std::vector<Series>& v);

// Hexagon cubic norm N(x,y,z) = x^3 + t y^3 + t^2 z^3, and the component
// valuation nu_E(x,y,z) = min(nu x, nu y + 1/3, nu z + 2/3).
Series hexagon_norm(const Element& e);
Level hexagon_nu_e(const Element& e);

// Octagon norm t^(sigma+2) + u t + u^sigma.
Series octagon_norm(const Series& t, const Series& u);

}  // namespace nonarch
