#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyrep {

// Positive power-of-two weights, one per facet containing a k-face, aligned
// with the face's increasing facet indices.
using WeightVector = std::vector<std::uint64_t>;

// Weight set for k-faces of a simple d-polytope, in lexicographic order:
//   k = d-1 : {(1)}
//   k = d-2 : {(1,1)}
//   k = d-3 : {(1,1,2), (1,2,1), (2,1,1)}
//   k <= d-4: all (2^l_1, ..., 2^l_{d-k}) with 0 <= l_i <= d-k-2
// Throws std::out_of_range for k >= d.
std::vector<WeightVector> weight_sets(std::size_t d, std::size_t k);

// Number of polynomials in the constructed representation: one product per
// weight vector per face dimension, plus the approximating polynomial.
std::size_t mu_count(std::size_t d);

}  // namespace polyrep
