#pragma once

#include <functional>
#include <memory>
#include <string>

#include "nonarch/contract.hpp"

namespace nonarch {

// One level of an extension tower: the group S seen as an extension of a
// scalar line (via the epimorphism rho) by the normal subgroup T'. The
// independent element x has rho(x) an invertible monomial, so every z in S
// decomposes exactly as z = act(x, l) + y with l = rho(z)/rho(x) and y in
// T'. `sub` describes T' as its own extension level; a null sub means T'
// is trivial.
struct ExtensionView {
  GroupPtr group;   // S; element layout is shared down the whole tower
  GroupPtr kline;   // the scalar line as an omega-group (for projected balls)
  std::string name;
  Element x;        // independent element of this level
  Series rho_x;     // rho(x); invertible monomial
  QuadExt m;        // modulus of this level's action
  std::function<Series(const Element&)> rho;
  std::function<Element(const Element&, const Series&)> act;
  std::function<bool(const Element&)> in_tprime;
  std::function<Element(SampleRng&)> sample_tprime;
  std::shared_ptr<const ExtensionView> sub;

  struct Decomposition {
    Series l;
    Element y;
  };

  // act(x, l); the zero scalar contributes the identity.
  Element apply_x(const Series& l) const;
  // Exact: divides rho(z) by the monomial rho_x and peels off the T' part.
  Decomposition decompose(const Element& z) const;
};

using ViewPtr = std::shared_ptr<const ExtensionView>;

// Builds the canonical extension tower for a family. Supported ids:
// "triangle", "involutory", "quadratic", "pseudo-quadratic", "indifferent",
// "hexagon", "octagon", "f4-a", "f4-b". `dimension` applies to the
// quadratic (default 3) and pseudo-quadratic (default 1) towers.
ViewPtr make_extension_view(const std::string& family_id, std::size_t dimension = 0);

}  // namespace nonarch
