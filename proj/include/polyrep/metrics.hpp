#pragma once

#include <optional>
#include <vector>

#include "polyrep/face_lattice.hpp"
#include "polyrep/weights.hpp"

namespace polyrep {

// Squared distances use std::nullopt for +infinity.
using ExtendedRat = std::optional<Rat>;

enum class RhoMode { dimension, exact };

// Two outer halfspaces {<a,x> >= h_a} and {<b,x> >= h_b}.
struct Wedge {
  RatVec a;
  Rat h_a;
  RatVec b;
  Rat h_b;
};

struct Recentered {
  HPolytope shifted;
  RatVec shift;
};

struct Diameter {
  Rat diam_sq;
  Rat diam_upper;  // least n / 2^16 with diam_upper^2 >= diam_sq
};

struct MetricsBundle {
  RatVec shift;
  std::vector<Rat> h_minus;  // h(-a^i) in the shifted frame
  Rat diam_sq;
  Rat diam_upper;
  Rat r_min;
  std::vector<ExtendedRat> eps_k_sq;  // index k = 0 .. d-1
  Rat eps_bar;
  unsigned long exponent_p = 1;
  RhoMode rho_mode = RhoMode::exact;
  Rat rho;
};

struct MetricsOptions {
  RhoMode rho_mode = RhoMode::exact;
  std::optional<Rat> eps_bar;     // must satisfy eps_bar^2 < every finite eps_k^2
  std::optional<Rat> diam_upper;  // must satisfy diam_upper^2 >= diam_sq
};

Rat support_value(const std::vector<Vertex>& vertices, const RatVec& u);

// Moves the vertex barycenter to the origin.
Recentered recenter(const HPolytope& h, const std::vector<Vertex>& vertices);

Diameter diameter(const std::vector<Vertex>& vertices);

// Squared distance between the polytope and the wedge U(a,b):
//   0        if the wedge meets the polytope,
//   nullopt  if the wedge is empty,
//   otherwise the exact minimum over face pairs of the stationarity system on
//   their affine hulls, restricted to pairs feasible in both sets.
ExtendedRat wedge_distance_sq(const HPolytope& h, const FaceLattice& lattice, const Wedge& wedge);

// Minimum positive finite wedge distance over distinct k-face pairs and
// all weights; nullopt when there is none.
ExtendedRat face_epsilon_sq(const HPolytope& h, const FaceLattice& lattice, std::size_t k,
                            const std::vector<WeightVector>& weights);

// Rational q with 0 < q and q^2 <= (min finite value) / 4, or 1 when all are
// infinite.
Rat choose_eps_bar(const std::vector<ExtendedRat>& eps_k_sq);

// Least p >= 1 with (1 + 2 eps_bar rho / diam_upper)^(2p) > m, decided by
// exact rational powering. rho = 1/(d+1) or r_min depending on mode.
unsigned long choose_exponent(std::size_t m, std::size_t d, const Rat& eps_bar, const Rat& diam_upper,
                              RhoMode mode, const Rat& r_min);

// Full metrics for a validated simple polytope.
MetricsBundle compute_metrics(const HPolytope& h, const FaceLattice& lattice, const MetricsOptions& options);

}  // namespace polyrep
