#pragma once

#include <optional>
#include <vector>

#include "polyrep/construction.hpp"
#include "polyrep/hpolytope.hpp"
#include "polyrep/sparse_poly.hpp"

namespace polyrep {

// f(x) = (x - origin) / (<c, x - origin> + 1) maps a pointed polyhedron with a
// simple vertex at `origin` onto a polytope whose closure is `image`.
struct Projectivization {
  HPolytope image;  // rows (a^i + b'_i c) y <= b'_i, then <c, y> <= 1
  RatVec c;
  RatVec origin;    // the chosen vertex, in the input frame
  std::size_t vertex_index = 0;

  // nullopt when <c, x - origin> + 1 <= 0 (outside the map's domain).
  std::optional<RatVec> apply(const RatVec& x) const;
};

// `vertex` indexes the enumerated vertices (sorted by coordinates). Throws
// ValidationError for bounded, non-pointed or non-simple-at-vertex input and
// when no permissible c exists for that vertex.
Projectivization projectivize_pointed(const HPolytope& h, std::size_t vertex = 0);

struct Pullback {
  std::vector<SparsePoly> polys;  // (<c, x-v> + 1)^t p(f(x))
  SparsePoly final_linear;        // <c, x - v> >= 0 replaces <c, y> <= 1
};

// Pulls back a representation of the image given as expanded polynomials.
// When the image representation includes its own description of <c, y> <= 1
// it is still kept; the final inequality is always appended.
Pullback pullback_polys(const std::vector<SparsePoly>& image_polys, const Projectivization& map);

// Pullback of a constructed representation. Products are expanded under the
// guard; the approximating polynomial stays structured and is evaluated as
// p_eps(f(x)).
struct PulledBackPRep {
  std::vector<std::string> ids;
  std::vector<SparsePoly> products;
  EpsilonPoly epsilon;
  Projectivization map;
  SparsePoly final_linear;

  std::size_t polynomial_count() const { return products.size() + 2; }
};

PulledBackPRep pullback_prep(const PRepresentation& image_prep, const Projectivization& map,
                             const ExpansionGuard& guard = {});

// Every pulled-back product >= 0, the final inequality, then p_eps(f(x)) <= 1.
bool member_pullback(const PulledBackPRep& rep, const RatVec& x);

}  // namespace polyrep
