#pragma once

#include <string>

#include "polyrep/face_lattice.hpp"
#include "polyrep/weights.hpp"

namespace polyrep {

// Affine functional constant + <coeffs, x>.
struct LinearForm {
  Rat constant;
  RatVec coeffs;

  Rat eval(const RatVec& x) const { return constant + dot(coeffs, x); }
  bool operator==(const LinearForm&) const = default;

  // "(10-2x1-3x2-5x3)" with 1-based variable names.
  std::string to_string() const;
};

// b_i - <a^i, x>
LinearForm facet_form(const HRow& row);

// Support form of face F for weights w:
//   (sum_j w_j b_[F]_j) - <sum_j w_j a^[F]_j, x>.
// The support value uses the sum formula, valid because F lies on every
// facet it is built from. Throws std::invalid_argument on a length mismatch.
LinearForm face_support_form(const Face& face, const WeightVector& w, const HPolytope& h);

}  // namespace polyrep
