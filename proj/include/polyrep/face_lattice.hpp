#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/hpolytope.hpp"

namespace polyrep {

// Vertex with the sorted indices of every row tight at it.
struct Vertex {
  RatVec coords;
  std::vector<std::size_t> facets;
};

// A k-face of a simple polytope: the d-k facets containing it, in increasing
// order, and the vertices lying on all of them.
struct Face {
  std::size_t k = 0;
  std::vector<std::size_t> facets;
  std::vector<std::size_t> vertex_ids;
};

struct FaceLattice {
  std::size_t dim = 0;
  std::vector<Vertex> vertices;
  std::vector<std::vector<Face>> faces_by_dim;  // index k = 0 .. dim-1

  std::vector<std::size_t> f_vector() const;
  const std::vector<Face>& faces(std::size_t k) const { return faces_by_dim.at(k); }
  RatVec barycenter(const Face& face) const;
};

enum class ViolationKind { unbounded_direction, redundant_row, non_simple_vertex, not_full_dimensional, no_vertices };

struct Violation {
  ViolationKind kind;
  std::size_t row = 0;                    // redundant_row (0-based)
  RatVec witness;                         // ray or vertex coordinates
  std::vector<std::size_t> active_rows;   // non_simple_vertex

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool bounded = true;
  bool irredundant = true;
  bool simple = true;

  bool valid() const { return violations.empty(); }
  std::string describe() const;
};

// Desk-scale limits on the subset enumeration.
inline constexpr std::size_t kMaxDimension = 8;
inline constexpr double kMaxSubsets = 1e7;

// Brute force over all d-subsets of rows. Result sorted lexicographically by
// coordinates. Throws ValidationError("no vertices") when nothing survives,
// ResourceError beyond the guard rails.
std::vector<Vertex> enumerate_vertices(const HPolytope& h);

// Same enumeration without the polytope preconditions; may return nothing.
std::vector<Vertex> enumerate_polyhedron_vertices(const HPolytope& h);

ValidationReport validate_hrep(const HPolytope& h, const std::vector<Vertex>& vertices);

// Requires a validated simple polytope.
FaceLattice build_face_lattice(const HPolytope& h, std::vector<Vertex> vertices);

// enumerate + validate + build; throws ValidationError with the report text.
FaceLattice validated_lattice(const HPolytope& h);

double binomial(std::size_t n, std::size_t k);

}  // namespace polyrep
