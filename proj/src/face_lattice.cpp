#include "polyrep/face_lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polyrep/errors.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/lp.hpp"

namespace polyrep {

RatMatrix HPolytope::normals() const {
  RatMatrix a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.push_back(r.normal);
  return a;
}

RatVec HPolytope::rhs() const {
  RatVec b;
  b.reserve(rows.size());
  for (const auto& r : rows) b.push_back(r.rhs);
  return b;
}

bool HPolytope::contains(const RatVec& x) const {
  return std::all_of(rows.begin(), rows.end(), [&](const HRow& r) { return sgn(r.slack(x)) >= 0; });
}

void check_dimensions(const HPolytope& h) {
  if (h.dim == 0) throw ValidationError("dimension must be positive");
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.rows[i].normal.size() != h.dim) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(h.rows[i].normal.size()) + " coefficients, expected " +
                            std::to_string(h.dim));
    }
  }
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_by_dim) f.push_back(level.size());
  return f;
}

RatVec FaceLattice::barycenter(const Face& face) const {
  RatVec c = zeros(dim);
  for (auto id : face.vertex_ids) c = add(c, vertices[id].coords);
  return scale(c, Rat(1, static_cast<unsigned long>(face.vertex_ids.size())));
}

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i] + 1;
  out << '}';
  return out.str();
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> active_rows(const HPolytope& h, const RatVec& x) {
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    if (sgn(h.rows[i].slack(x)) == 0) act.push_back(i);
  return act;
}

}  // namespace

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::unbounded_direction:
      return "unbounded-direction: ray " + to_string(witness);
    case ViolationKind::redundant_row:
      return "redundant-row: row " + std::to_string(row + 1);
    case ViolationKind::non_simple_vertex:
      return "non-simple-vertex: " + to_string(witness) + " active in rows " + index_list(active_rows);
    case ViolationKind::not_full_dimensional:
      return "not-full-dimensional: no interior point";
    case ViolationKind::no_vertices:
      return "no vertices";
  }
  return "unknown";
}

std::string ValidationReport::describe() const {
  if (valid()) return "valid, simple";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) out << (i ? "\n" : "") << violations[i].describe();
  return out.str();
}

std::vector<Vertex> enumerate_polyhedron_vertices(const HPolytope& h) {
  check_dimensions(h);
  const std::size_t d = h.dim;
  const std::size_t m = h.rows.size();
  if (d > kMaxDimension) throw ResourceError("dimension " + std::to_string(d) + " exceeds limit " +
                                             std::to_string(kMaxDimension));
  if (binomial(m, d) > kMaxSubsets) throw ResourceError("too many row subsets for vertex enumeration");

  std::map<RatVec, Vertex> found;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& subset) {
    RatMatrix a;
    RatVec b;
    for (auto i : subset) {
      a.push_back(h.rows[i].normal);
      b.push_back(h.rows[i].rhs);
    }
    auto x = solve_square_system(a, b);
    if (!x || !h.contains(*x) || found.count(*x)) return;
    Vertex v{*x, active_rows(h, *x)};
    found.emplace(*x, std::move(v));
  });
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [coords, v] : found) out.push_back(std::move(v));
  return out;
}

std::vector<Vertex> enumerate_vertices(const HPolytope& h) {
  check_dimensions(h);
  if (h.rows.size() < h.dim + 1)
    throw ValidationError("need at least d+1 rows, got " + std::to_string(h.rows.size()));
  auto out = enumerate_polyhedron_vertices(h);
  if (out.empty()) throw ValidationError("no vertices");
  return out;
}

ValidationReport validate_hrep(const HPolytope& h, const std::vector<Vertex>& vertices) {
  ValidationReport report;
  const std::size_t d = h.dim;
  const RatMatrix a = h.normals();
  const RatVec b = h.rhs();

  // Interior point: maximize t subject to A x + t 1 <= b, t <= 1.
  {
    RatMatrix ax = a;
    for (auto& row : ax) row.push_back(1);
    RatVec cap = zeros(d + 1);
    cap[d] = 1;
    ax.push_back(cap);
    RatVec bx = b;
    bx.push_back(1);
    const auto r = lp_solve(unit(d + 1, d), ax, bx, Sense::maximize);
    if (r.status != LpStatus::optimal || sgn(r.optimum) <= 0) {
      report.violations.push_back({ViolationKind::not_full_dimensional, 0, {}, {}});
    }
  }

  std::set<RatVec> rays;
  for (std::size_t j = 0; j < d; ++j) {
    for (int s : {1, -1}) {
      const auto r = lp_solve(scale(unit(d, j), s), a, b, Sense::maximize);
      if (r.status == LpStatus::unbounded && rays.insert(r.witness).second) {
        report.bounded = false;
        report.violations.push_back({ViolationKind::unbounded_direction, 0, r.witness, {}});
      }
    }
  }

  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    RatMatrix others;
    RatVec rhs;
    for (std::size_t k = 0; k < h.rows.size(); ++k) {
      if (k == i) continue;
      others.push_back(a[k]);
      rhs.push_back(b[k]);
    }
    const auto r = lp_solve(a[i], others, rhs, Sense::maximize);
    const bool cuts = r.status == LpStatus::unbounded || (r.status == LpStatus::optimal && r.optimum > b[i]);
    if (!cuts) {
      report.irredundant = false;
      report.violations.push_back({ViolationKind::redundant_row, i, {}, {}});
    }
  }

  for (const auto& v : vertices) {
    if (v.facets.size() != d) {
      report.simple = false;
      report.violations.push_back({ViolationKind::non_simple_vertex, 0, v.coords, v.facets});
    }
  }
  return report;
}

FaceLattice build_face_lattice(const HPolytope& h, std::vector<Vertex> vertices) {
  FaceLattice lattice;
  lattice.dim = h.dim;
  lattice.vertices = std::move(vertices);
  const std::size_t d = h.dim;
  lattice.faces_by_dim.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::set<std::vector<std::size_t>> keys;
    for (const auto& v : lattice.vertices) {
      for_each_subset(v.facets.size(), d - k, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> s;
        for (auto p : pick) s.push_back(v.facets[p]);
        keys.insert(std::move(s));
      });
    }
    for (const auto& key : keys) {
      Face face{k, key, {}};
      for (std::size_t id = 0; id < lattice.vertices.size(); ++id) {
        const auto& fs = lattice.vertices[id].facets;
        if (std::includes(fs.begin(), fs.end(), key.begin(), key.end())) face.vertex_ids.push_back(id);
      }
      lattice.faces_by_dim[k].push_back(std::move(face));
    }
  }
  return lattice;
}

FaceLattice validated_lattice(const HPolytope& h) {
  auto vertices = enumerate_vertices(h);
  const auto report = validate_hrep(h, vertices);
  if (!report.valid()) throw ValidationError(report.describe());
  return build_face_lattice(h, std::move(vertices));
}

}  // namespace polyrep
