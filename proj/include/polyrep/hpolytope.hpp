#pragma once

#include <cstddef>
#include <vector>

#include "polyrep/rational.hpp"

namespace polyrep {

// One inequality <normal, x> <= rhs.
struct HRow {
  RatVec normal;
  Rat rhs;

  Rat slack(const RatVec& x) const { return rhs - dot(normal, x); }
  bool operator==(const HRow&) const = default;
};

// Linear inequality system <a^i, x> <= b_i, i = 0..m-1, in dimension `dim`.
struct HPolytope {
  std::size_t dim = 0;
  std::vector<HRow> rows;

  std::size_t size() const { return rows.size(); }
  RatMatrix normals() const;
  RatVec rhs() const;
  bool contains(const RatVec& x) const;
  bool operator==(const HPolytope&) const = default;
};

// Throws ValidationError when a row's length does not match dim.
void check_dimensions(const HPolytope& h);

}  // namespace polyrep
