#include "polyrep/construction.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include "polyrep/errors.hpp"

namespace polyrep {

std::string ProductPoly::id() const {
  std::string s = "p_" + std::to_string(k);
  if (weights.size() > 2) {
    for (auto w : weights) s += "_" + std::to_string(w);
  }
  return s;
}

LinearForm EpsilonPoly::base_form(std::size_t i) const {
  const auto& term = terms.at(i);
  const Rat den = term.rhs + term.h_minus;
  LinearForm f;
  f.coeffs = scale(term.normal, 2 / den);
  f.constant = (-2 * dot(term.normal, shift) - term.rhs + term.h_minus) / den;
  return f;
}

ProductPoly face_product_poly(std::size_t k, const WeightVector& w, const FaceLattice& lattice, const HPolytope& h) {
  ProductPoly pp{k, w, {}};
  const auto& faces = lattice.faces(k);
  pp.factors.reserve(faces.size());
  for (const auto& face : faces) pp.factors.push_back(face_support_form(face, w, h));
  return pp;
}

EpsilonPoly epsilon_poly(const HPolytope& shifted, const RatVec& shift, const std::vector<Rat>& h_minus,
                         unsigned long exponent_p) {
  EpsilonPoly ep;
  ep.weight = Rat(1, static_cast<unsigned long>(shifted.size()));
  ep.two_p = 2 * exponent_p;
  ep.shift = shift;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    const auto& row = shifted.rows[i];
    if (sgn(row.rhs) <= 0 || sgn(row.rhs + h_minus.at(i)) <= 0) {
      throw ValidationError("approximating polynomial: row " + std::to_string(i + 1) +
                            " has a nonpositive shifted rhs or denominator");
    }
    ep.terms.push_back({row.normal, row.rhs, h_minus[i]});
  }
  return ep;
}

Construction construct(const HPolytope& h, const ConstructOptions& options) {
  Construction c;
  c.lattice = validated_lattice(h);
  c.metrics = compute_metrics(h, c.lattice, options.metrics);

  const std::size_t d = h.dim;
  PRepresentation& prep = c.prep;
  prep.dim = d;
  prep.shift = c.metrics.shift;
  for (std::size_t k = d; k-- > 0;) {
    for (const auto& w : weight_sets(d, k)) prep.products.push_back(face_product_poly(k, w, c.lattice, h));
  }
  const auto centered = recenter(h, c.lattice.vertices);
  prep.epsilon = epsilon_poly(centered.shifted, centered.shift, c.metrics.h_minus, c.metrics.exponent_p);
  prep.metadata.mu = mu_count(d);
  prep.metadata.source_hash = hrep_hash(h);
  prep.metadata.eps_bar = c.metrics.eps_bar;
  prep.metadata.exponent_p = c.metrics.exponent_p;
  return c;
}

PRepresentation construct_prep(const HPolytope& h, const ConstructOptions& options) {
  return construct(h, options).prep;
}

std::string hrep_hash(const HPolytope& h) {
  std::ostringstream text;
  text << h.dim << ' ' << h.size() << '\n';
  for (const auto& row : h.rows) {
    for (const auto& a : row.normal) text << a.get_str() << ' ';
    text << row.rhs.get_str() << '\n';
  }
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : text.str()) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

}  // namespace polyrep
