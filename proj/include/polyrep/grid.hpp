#pragma once

#include <functional>
#include <string>

#include "polyrep/construction.hpp"

namespace polyrep {

// Axis-aligned box sampled at lo + i * step in every coordinate.
struct GridSpec {
  RatVec lo;
  RatVec hi;
  Rat step;
};

inline constexpr std::size_t kMaxGridCells = 1000000;

// Zero when some hi < lo. Throws ValidationError for a nonpositive step or a
// dimension mismatch, ResourceError past kMaxGridCells.
std::size_t grid_cell_count(const GridSpec& spec);

// Visits every grid point, first coordinate slowest.
void for_each_grid_point(const GridSpec& spec, const std::function<void(const RatVec&)>& visit);

struct GridCounts {
  std::size_t cells = 0;
  std::size_t inside_prep = 0;
  std::size_t inside_hrep = 0;
  std::size_t disagreements = 0;
};

// Header x1..xd, one sign column per polynomial (for p_eps the sign of
// 1 - p_eps), then member_prep and member_hrep as 0/1. Requires d in {2,3}.
std::string grid_eval_csv(const HPolytope& h, const PRepresentation& prep, const GridSpec& spec,
                          GridCounts* counts = nullptr);

}  // namespace polyrep
