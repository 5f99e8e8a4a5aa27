#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/construction.hpp"
#include "polyrep/sparse_poly.hpp"

namespace polyrep {

Rat eval_product(const ProductPoly& pp, const RatVec& x);

// Sign of the product from the factor signs alone.
int product_sign(const ProductPoly& pp, const RatVec& x);

// Refuse exact evaluation of the approximating polynomial past this many bits.
inline constexpr std::size_t kExactBitLimit = 10000000;

// Exact sum_i weight * v_i(x)^two_p. Throws ResourceError past kExactBitLimit.
Rat eval_epsilon_exact(const EpsilonPoly& ep, const RatVec& x);

// Floating evaluation with a rigorous error margin: the sign of p_eps(x) - 1
// when the margin allows a decision, nullopt otherwise.
std::optional<int> guarded_epsilon_compare(const EpsilonPoly& ep, const RatVec& x);

enum class EvalMode { exact, guarded };

struct EpsilonVerdict {
  int cmp = 0;                  // sign of p_eps(x) - 1
  bool float_certified = false;  // decided without exact evaluation
};

// Guarded mode tries the float path first and falls back to exact evaluation
// when the margin straddles 1.
EpsilonVerdict compare_epsilon(const EpsilonPoly& ep, const RatVec& x, EvalMode mode = EvalMode::guarded);

inline constexpr const char* kEpsilonId = "p_eps";

struct ViolatedPoly {
  std::string id;
  std::optional<Rat> value;
};

struct MembershipVerdict {
  bool inside = true;
  std::vector<ViolatedPoly> violated;
};

struct MemberOptions {
  bool all_violations = false;  // keep checking after the first failure
  bool values = false;          // record exact values of violated polynomials
  EvalMode epsilon_mode = EvalMode::guarded;
};

// Row ids are "row_<i>" (1-based); values are the violated slacks.
MembershipVerdict member_hrep(const HPolytope& h, const RatVec& x, bool all_violations = true);

// Products of level k >= 1, then the approximating polynomial, then level 0.
MembershipVerdict member_prep(const PRepresentation& prep, const RatVec& x, const MemberOptions& options = {});

// Nonnegativity of every polynomial; ids default to "q_<i>".
MembershipVerdict member_polys(const std::vector<SparsePoly>& polys, const RatVec& x,
                               const std::vector<std::string>& ids = {});

enum class SampleClass { interior, boundary, near_outside, far_outside, random_box };
inline constexpr std::size_t kSampleClasses = 5;
const char* to_string(SampleClass c);

struct Sample {
  SampleClass cls;
  RatVec point;
};

// Random counts per class; the structured samples (face barycenters, steps
// along facet normals, box corners) are always added on top.
struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t interior = 1000;
  std::size_t boundary = 500;
  std::size_t near_outside = 1000;
  std::size_t random_box = 2000;

  // Splits `total` random samples 30/10/20/40 across the classes.
  static SampleConfig with_total(std::size_t total, std::uint64_t seed);
};

// A face for sampling purposes: vertex ids and the rows tight on it.
struct SampleFace {
  std::vector<std::size_t> vertex_ids;
  std::vector<std::size_t> facets;
};

// All lattice faces of a simple polytope.
std::vector<SampleFace> sample_faces(const FaceLattice& lattice);
// Vertices and facets only; works for non-simple polytopes.
std::vector<SampleFace> sample_faces(const HPolytope& h, const std::vector<Vertex>& vertices);

// Every random sample draws from its own generator seeded with
// seed + sample index, so the list does not depend on evaluation order.
std::vector<Sample> generate_samples(const HPolytope& h, const std::vector<Vertex>& vertices,
                                     const std::vector<SampleFace>& faces, const Rat& step,
                                     const SampleConfig& config);

struct Disagreement {
  std::size_t index = 0;
  SampleClass cls = SampleClass::interior;
  RatVec point;
  bool reference_inside = false;
  bool candidate_inside = false;
};

struct EquivalenceReport {
  std::array<std::size_t, kSampleClasses> per_class{};
  std::array<std::size_t, kSampleClasses> inside_per_class{};
  std::vector<Disagreement> disagreements;

  std::size_t total() const;
  bool passed() const { return disagreements.empty(); }
  std::string summary() const;
};

using Membership = std::function<bool(const RatVec&)>;

EquivalenceReport compare_on_samples(const std::vector<Sample>& samples, const Membership& reference,
                                     const Membership& candidate);

// member_hrep against member_prep over the five sample classes; near-outside
// steps are multiples of the representation's eps_bar.
EquivalenceReport equivalence_test(const HPolytope& h, const FaceLattice& lattice, const PRepresentation& prep,
                                   const SampleConfig& config);

struct StructuralReport {
  bool facet_factor = true;
  bool face_vanishing = true;
  bool epsilon_vertices = true;
  std::vector<std::string> failures;

  bool passed() const { return facet_factor && face_vanishing && epsilon_vertices; }
  std::string summary() const;
};

// Facet forms appear verbatim in the top-level product; every product of
// level j >= k vanishes on each k-face (barycenter plus three random affine
// combinations of its vertices); p_eps <= 1 on every vertex.
StructuralReport structural_checks(const HPolytope& h, const FaceLattice& lattice, const PRepresentation& prep,
                                   std::uint64_t seed = 0);

// `count` points at distance >= `distance` outside a facet: a random point of
// the facet plus a rational multiple of its normal.
std::vector<RatVec> outward_points(const HPolytope& h, const FaceLattice& lattice, const Rat& distance,
                                   std::size_t count, std::uint64_t seed);

}  // namespace polyrep
