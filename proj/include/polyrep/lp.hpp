#pragma once

#include "polyrep/rational.hpp"

namespace polyrep {

enum class LpStatus { optimal, unbounded, infeasible };
enum class Sense { maximize, minimize };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat optimum;      // meaningful when optimal
  RatVec witness;   // optimal point, or an improving ray when unbounded
};

// Optimizes <objective, x> over {x : A x <= b} with x free, using a dense
// two-phase tableau simplex and Bland's rule.
LpResult lp_solve(const RatVec& objective, const RatMatrix& a, const RatVec& b, Sense sense);

// Feasibility of {A x <= b}; returns a feasible point when one exists.
bool lp_feasible(const RatMatrix& a, const RatVec& b, RatVec* point = nullptr);

}  // namespace polyrep
