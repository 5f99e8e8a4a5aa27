#pragma once

#include <string>
#include <vector>

#include "polyrep/forms.hpp"
#include "polyrep/metrics.hpp"

namespace polyrep {

// prod over all k-faces F of [h(a(F,w)) - <a(F,w), x>], kept factored.
struct ProductPoly {
  std::size_t k = 0;
  WeightVector weights;
  std::vector<LinearForm> factors;

  // "p_2", "p_1", "p_0_1_1_2": weights only appear when the level has several.
  std::string id() const;
  bool operator==(const ProductPoly&) const = default;
};

// One summand of the approximating polynomial, in the shifted frame:
// v(x) = (2<a, x - t> - b + h_minus) / (b + h_minus).
struct EpsilonTerm {
  RatVec normal;
  Rat rhs;
  Rat h_minus;
  bool operator==(const EpsilonTerm&) const = default;
};

// sum_i weight * v_i(x)^two_p; never expanded.
struct EpsilonPoly {
  std::vector<EpsilonTerm> terms;
  Rat weight;
  unsigned long two_p = 2;
  RatVec shift;

  // v_i written in the original frame: constant + <coeffs, x>.
  LinearForm base_form(std::size_t i) const;
  bool operator==(const EpsilonPoly&) const = default;
};

struct PRepMetadata {
  std::size_t mu = 0;
  std::string source_hash;
  Rat eps_bar;
  unsigned long exponent_p = 0;
  bool operator==(const PRepMetadata&) const = default;
};

// Membership: every product >= 0 and the approximating polynomial <= 1.
struct PRepresentation {
  std::size_t dim = 0;
  std::vector<ProductPoly> products;  // k = d-1 down to 0, weights lexicographic
  EpsilonPoly epsilon;
  RatVec shift;
  PRepMetadata metadata;

  std::size_t polynomial_count() const { return products.size() + 1; }
  bool operator==(const PRepresentation&) const = default;
};

inline constexpr const char* kConvention = "products>=0;epsilon<=1";

ProductPoly face_product_poly(std::size_t k, const WeightVector& w, const FaceLattice& lattice, const HPolytope& h);

// `shifted` must have every rhs > 0; h_minus are support values of -a^i in the
// same frame. Throws ValidationError on a nonpositive denominator.
EpsilonPoly epsilon_poly(const HPolytope& shifted, const RatVec& shift, const std::vector<Rat>& h_minus,
                         unsigned long exponent_p);

struct ConstructOptions {
  MetricsOptions metrics;
};

struct Construction {
  FaceLattice lattice;
  MetricsBundle metrics;
  PRepresentation prep;
};

// validate -> face lattice -> metrics -> products -> approximating polynomial.
Construction construct(const HPolytope& h, const ConstructOptions& options = {});
PRepresentation construct_prep(const HPolytope& h, const ConstructOptions& options = {});

// FNV-1a over the canonical row text, hex encoded.
std::string hrep_hash(const HPolytope& h);

}  // namespace polyrep
