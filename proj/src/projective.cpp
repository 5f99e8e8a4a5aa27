#include "polyrep/projective.hpp"

#include <set>

#include "polyrep/errors.hpp"
#include "polyrep/face_lattice.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/lp.hpp"
#include "polyrep/verify.hpp"

namespace polyrep {

namespace {

bool is_bounded(const HPolytope& h) {
  const auto a = h.normals();
  const auto b = h.rhs();
  for (std::size_t j = 0; j < h.dim; ++j) {
    for (int s : {1, -1}) {
      if (lp_solve(scale(unit(h.dim, j), s), a, b, Sense::maximize).status == LpStatus::unbounded) return false;
    }
  }
  return true;
}

// Extreme rays of {r : A r <= 0}: nonzero kernel directions of (d-1)-row
// subsets that satisfy every row, up to positive scaling.
std::vector<RatVec> recession_rays(const HPolytope& h) {
  const std::size_t d = h.dim;
  const std::size_t m = h.rows.size();
  std::set<RatVec> rays;
  std::vector<std::size_t> idx(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) idx[i] = i;
  auto visit = [&](const RatMatrix& rows) {
    const auto ker = kernel_basis(rows, d);
    if (ker.size() != 1) return;
    for (int s : {1, -1}) {
      RatVec r = scale(ker[0], s);
      bool ok = true;
      for (const auto& row : h.rows) ok = ok && sgn(dot(row.normal, r)) <= 0;
      if (!ok) continue;
      // Normalize so the first nonzero entry is +-1.
      for (const auto& e : r) {
        if (sgn(e) != 0) {
          r = scale(r, 1 / abs(e));
          break;
        }
      }
      rays.insert(r);
    }
  };
  if (d == 1) {
    visit({});
  } else if (m + 1 >= d) {
    for (;;) {
      RatMatrix rows;
      for (auto i : idx) rows.push_back(h.rows[i].normal);
      visit(rows);
      std::size_t i = d - 1;
      while (i > 0 && idx[i - 1] == m - (d - 1) + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {rays.begin(), rays.end()};
}

}  // namespace

std::optional<RatVec> Projectivization::apply(const RatVec& x) const {
  const RatVec u = sub(x, origin);
  const Rat den = dot(c, u) + 1;
  if (sgn(den) <= 0) return std::nullopt;
  return scale(u, 1 / den);
}

Projectivization projectivize_pointed(const HPolytope& h, std::size_t vertex) {
  check_dimensions(h);
  const std::size_t d = h.dim;
  if (!kernel_basis(h.normals(), d).empty()) {
    throw ValidationError("input is not pointed (nontrivial lineality space); quotient it first");
  }
  if (is_bounded(h)) throw ValidationError("input bounded; projectivization not needed");

  const auto vertices = enumerate_polyhedron_vertices(h);
  if (vertices.empty()) throw ValidationError("no vertices");
  if (vertex >= vertices.size()) {
    throw ValidationError("vertex index " + std::to_string(vertex) + " out of range (" +
                          std::to_string(vertices.size()) + " vertices)");
  }
  const Vertex& v = vertices[vertex];
  if (v.facets.size() != d) throw ValidationError("chosen vertex is not simple; the image may not be simple");

  // Edge directions of the vertex cone: drop one tight row at a time.
  RatMatrix tight;
  for (auto i : v.facets) tight.push_back(h.rows[i].normal);
  RatMatrix edge_rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec rhs = zeros(d);
    rhs[j] = -1;
    auto r = solve_square_system(tight, rhs);
    if (!r) throw ValidationError("tight rows at the chosen vertex are linearly dependent");
    edge_rays.push_back(*r);
  }
  auto c = solve_square_system(edge_rays, RatVec(d, Rat(1)));
  if (!c) throw ValidationError("vertex cone rays are linearly dependent");

  // The polyhedron sits in the simplicial vertex cone and c is positive on its
  // generators, so these checks only guard against bad arithmetic upstream.
  for (const auto& w : vertices) {
    if (w.coords == v.coords) continue;
    if (sgn(dot(*c, sub(w.coords, v.coords))) <= 0) {
      throw ValidationError("no permissible projective map at this vertex: vertex " + to_string(w.coords) +
                            " fails <c, v> > 0");
    }
  }
  for (const auto& r : recession_rays(h)) {
    if (sgn(dot(*c, r)) <= 0) {
      throw ValidationError("no permissible projective map at this vertex: recession ray " + to_string(r) +
                            " fails <c, r> > 0");
    }
  }

  Projectivization out;
  out.c = *c;
  out.origin = v.coords;
  out.vertex_index = vertex;
  out.image.dim = d;
  for (const auto& row : h.rows) {
    const Rat b = row.slack(v.coords);
    out.image.rows.push_back({add(row.normal, scale(*c, b)), b});
  }
  out.image.rows.push_back({*c, Rat(1)});
  return out;
}

namespace {

struct PullbackFrame {
  std::vector<SparsePoly> u;  // x_i - v_i
  SparsePoly shifted_c;       // <c, x - v>
  SparsePoly scale;           // <c, x - v> + 1
};

PullbackFrame frame_of(const Projectivization& map) {
  const std::size_t d = map.c.size();
  PullbackFrame f;
  LinearForm cf{-dot(map.c, map.origin), map.c};
  f.shifted_c = SparsePoly::from_linear(cf);
  f.scale = f.shifted_c + SparsePoly::constant(d, Rat(1));
  for (std::size_t i = 0; i < d; ++i) {
    LinearForm ui{-map.origin[i], unit(d, i)};
    f.u.push_back(SparsePoly::from_linear(ui));
  }
  return f;
}

}  // namespace

Pullback pullback_polys(const std::vector<SparsePoly>& image_polys, const Projectivization& map) {
  const auto frame = frame_of(map);
  Pullback out;
  for (const auto& p : image_polys) out.polys.push_back(p.homogenize(frame.u, frame.scale, p.total_degree()));
  out.final_linear = frame.shifted_c;
  return out;
}

PulledBackPRep pullback_prep(const PRepresentation& image_prep, const Projectivization& map,
                             const ExpansionGuard& guard) {
  if (image_prep.dim != map.c.size()) throw ValidationError("representation dimension does not match the map");
  const auto frame = frame_of(map);
  PulledBackPRep out;
  out.map = map;
  out.epsilon = image_prep.epsilon;
  out.final_linear = frame.shifted_c;
  for (const auto& pp : image_prep.products) {
    const auto expanded = expand_product(pp.factors, image_prep.dim, guard);
    out.ids.push_back(pp.id());
    out.products.push_back(expanded.homogenize(frame.u, frame.scale, expanded.total_degree()));
  }
  return out;
}

bool member_pullback(const PulledBackPRep& rep, const RatVec& x) {
  if (sgn(rep.final_linear.eval(x)) < 0) return false;
  for (const auto& p : rep.products)
    if (sgn(p.eval(x)) < 0) return false;
  // final >= 0 keeps <c, x - v> + 1 >= 1, so f is defined.
  return compare_epsilon(rep.epsilon, *rep.map.apply(x)).cmp <= 0;
}

}  // namespace polyrep
