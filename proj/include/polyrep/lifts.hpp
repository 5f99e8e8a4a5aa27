#pragma once

#include <vector>

#include "polyrep/sparse_poly.hpp"

namespace polyrep {

enum class ClosedForm { cube, simplex };

// cube:    1 - x_i^2 >= 0                   ([-1,1]^d)
// simplex: x_i (1 - x_i - ... - x_d) >= 0   ({x >= 0, sum x <= 1})
std::vector<SparsePoly> closed_form_rep(ClosedForm kind, std::size_t d);

// Base polynomials in d-1 variables -> Q x [0,1] in d variables.
std::vector<SparsePoly> prism_lift(const std::vector<SparsePoly>& base);

// z = linear * x + offset
struct AffineMap {
  RatMatrix linear;
  RatVec offset;

  RatVec apply(const RatVec& x) const;
  // The d coordinate functions z_i(x) as polynomials in x.
  std::vector<SparsePoly> as_polys() const;
};

// Lift for a base that already lies in the unit ball with apex e_d:
// (1 - x_d)^p p_j(x' / (1 - x_d)) for each j, p the largest base degree, plus
// x_d (1 - x_d - x_d |x'|^2).
std::vector<SparsePoly> pyramid_lift_normalized(const std::vector<SparsePoly>& base);

struct PyramidLift {
  AffineMap to_normalized;             // user frame -> normalized frame
  Rat scale;                           // base scaling applied after recentering
  RatVec center;                       // vertex barycenter of the base
  std::vector<SparsePoly> normalized;  // polynomials in the normalized frame
  std::vector<SparsePoly> polys;       // same, pulled back to the user frame
};

// Pyramid conv{Q x {0}, apex} in the user frame. `base` describes Q in d-1
// variables, `base_vertices` are Q's vertices (used for normalization) and
// apex has d coordinates with apex[d-1] != 0. Throws ValidationError when the
// base cannot be normalized.
PyramidLift pyramid_lift(const std::vector<SparsePoly>& base, const std::vector<RatVec>& base_vertices,
                         const RatVec& apex);

}  // namespace polyrep
