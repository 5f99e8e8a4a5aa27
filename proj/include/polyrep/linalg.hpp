#pragma once

#include <optional>

#include "polyrep/rational.hpp"

namespace polyrep {

// Exact solution of M x = rhs for square M; nullopt when M is singular.
std::optional<RatVec> solve_square_system(const RatMatrix& m, const RatVec& rhs);

// Basis of {x : A x = 0} with `cols` unknowns. Empty when A has full column rank.
std::vector<RatVec> kernel_basis(const RatMatrix& a, std::size_t cols);

std::size_t rank(const RatMatrix& a);

// Rank of the affine hull of a point set (number of points minus one at most).
std::size_t affine_rank(const std::vector<RatVec>& points);

}  // namespace polyrep
