#include "polyrep/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polyrep/errors.hpp"
#include "polyrep/forms.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/lp.hpp"

namespace polyrep {

Rat support_value(const std::vector<Vertex>& vertices, const RatVec& u) {
  Rat best = dot(u, vertices.at(0).coords);
  for (const auto& v : vertices) best = std::max(best, dot(u, v.coords));
  return best;
}

Recentered recenter(const HPolytope& h, const std::vector<Vertex>& vertices) {
  RatVec t = zeros(h.dim);
  for (const auto& v : vertices) t = add(t, v.coords);
  t = scale(t, Rat(1, static_cast<unsigned long>(vertices.size())));
  Recentered r{h, t};
  for (auto& row : r.shifted.rows) row.rhs -= dot(row.normal, t);
  return r;
}

Diameter diameter(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2) throw ValidationError("diameter needs at least two vertices");
  Rat best = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      best = std::max(best, norm_sq(sub(vertices[i].coords, vertices[j].coords)));
  return {best, sqrt_upper_dyadic(best, 16)};
}

namespace {

struct FlatSpec {
  RatMatrix eq;
  RatVec rhs;
};

// Stationary pair of min |x - y|^2 over x in the flat `p`, y in the flat `u`.
// nullopt when the stationarity system is singular (non-unique minimizers).
std::optional<std::pair<RatVec, RatVec>> closest_on_flats(std::size_t d, const FlatSpec& p, const FlatSpec& u) {
  const std::size_t sp = p.eq.size();
  const std::size_t su = u.eq.size();
  const std::size_t n = 2 * d + sp + su;
  RatMatrix m(n, RatVec(n, Rat(0)));
  RatVec rhs(n, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    m[i][i] = 1;
    m[i][d + i] = -1;
    for (std::size_t r = 0; r < sp; ++r) m[i][2 * d + r] = p.eq[r][i];
    m[d + i][i] = -1;
    m[d + i][d + i] = 1;
    for (std::size_t s = 0; s < su; ++s) m[d + i][2 * d + sp + s] = u.eq[s][i];
  }
  for (std::size_t r = 0; r < sp; ++r) {
    for (std::size_t i = 0; i < d; ++i) m[2 * d + r][i] = p.eq[r][i];
    rhs[2 * d + r] = p.rhs[r];
  }
  for (std::size_t s = 0; s < su; ++s) {
    for (std::size_t i = 0; i < d; ++i) m[2 * d + sp + s][d + i] = u.eq[s][i];
    rhs[2 * d + sp + s] = u.rhs[s];
  }
  auto sol = solve_square_system(m, rhs);
  if (!sol) return std::nullopt;
  RatVec x(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
  RatVec y(sol->begin() + static_cast<std::ptrdiff_t>(d), sol->begin() + static_cast<std::ptrdiff_t>(2 * d));
  return std::make_pair(std::move(x), std::move(y));
}

}  // namespace

namespace {

struct CandidateFace {
  FlatSpec flat;
  std::size_t dim;
  Rat lower_bound;  // squared distance from the face to U can not be smaller
};

// Exact wedge distance. When `cutoff` is set, returns early with a value
// >= cutoff as soon as no remaining face pair can beat it.
ExtendedRat wedge_distance_impl(const HPolytope& h, const FaceLattice& lattice, const Wedge& wedge,
                                const std::optional<Rat>& cutoff) {
  const std::size_t d = h.dim;

  RatMatrix ua{scale(wedge.a, Rat(-1)), scale(wedge.b, Rat(-1))};
  RatVec ub{-wedge.h_a, -wedge.h_b};
  if (!lp_feasible(ua, ub)) return std::nullopt;

  RatMatrix both = h.normals();
  RatVec both_rhs = h.rhs();
  both.insert(both.end(), ua.begin(), ua.end());
  both_rhs.insert(both_rhs.end(), ub.begin(), ub.end());
  if (lp_feasible(both, both_rhs)) return Rat(0);

  // dist(F, U) >= dist(F, {<a,y> >= h_a}) = min over vertices of F of the
  // normalized slack, and likewise for b.
  const Rat na = norm_sq(wedge.a);
  const Rat nb = norm_sq(wedge.b);
  std::vector<Rat> slack_a, slack_b;
  for (const auto& v : lattice.vertices) {
    slack_a.push_back(wedge.h_a - dot(wedge.a, v.coords));
    slack_b.push_back(wedge.h_b - dot(wedge.b, v.coords));
  }
  auto bound = [&](const std::vector<std::size_t>& ids) {
    Rat ma = slack_a[ids[0]], mb = slack_b[ids[0]];
    for (auto id : ids) {
      ma = std::min(ma, slack_a[id]);
      mb = std::min(mb, slack_b[id]);
    }
    Rat la = sgn(ma) > 0 ? Rat(ma * ma / na) : Rat(0);
    Rat lb = sgn(mb) > 0 ? Rat(mb * mb / nb) : Rat(0);
    return std::max(la, lb);
  };

  std::vector<CandidateFace> faces;
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& face : lattice.faces(k)) {
      CandidateFace c{{}, k, bound(face.vertex_ids)};
      for (auto i : face.facets) {
        c.flat.eq.push_back(h.rows[i].normal);
        c.flat.rhs.push_back(h.rows[i].rhs);
      }
      faces.push_back(std::move(c));
    }
  }
  {
    std::vector<std::size_t> all(lattice.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    faces.push_back({{}, d, bound(all)});
  }
  std::stable_sort(faces.begin(), faces.end(),
                   [](const CandidateFace& l, const CandidateFace& r) { return l.lower_bound < r.lower_bound; });

  std::vector<FlatSpec> wedge_flats(3);
  wedge_flats[0] = {{wedge.a}, {wedge.h_a}};
  wedge_flats[1] = {{wedge.b}, {wedge.h_b}};
  wedge_flats[2] = {{wedge.a, wedge.b}, {wedge.h_a, wedge.h_b}};
  // The full wedge paired with a vertex only yields the vertex itself, which
  // lies outside U once the feasibility test above has failed.

  std::optional<Rat> best;
  for (const auto& face : faces) {
    if (best && face.lower_bound >= *best) break;
    if (cutoff && face.lower_bound >= *cutoff) return face.lower_bound;
    for (const auto& uf : wedge_flats) {
      // Flats whose direction spaces intersect give a singular system.
      if (face.dim > uf.eq.size()) continue;
      auto pair = closest_on_flats(d, face.flat, uf);
      if (!pair) continue;
      const auto& [x, y] = *pair;
      if (dot(wedge.a, y) < wedge.h_a || dot(wedge.b, y) < wedge.h_b || !h.contains(x)) continue;
      Rat dist = norm_sq(sub(x, y));
      if (!best || dist < *best) best = dist;
    }
  }
  if (!best) throw std::logic_error("wedge distance: no feasible stationary pair");
  return best;
}

}  // namespace

ExtendedRat wedge_distance_sq(const HPolytope& h, const FaceLattice& lattice, const Wedge& wedge) {
  return wedge_distance_impl(h, lattice, wedge, std::nullopt);
}

ExtendedRat face_epsilon_sq(const HPolytope& h, const FaceLattice& lattice, std::size_t k,
                            const std::vector<WeightVector>& weights) {
  const auto& faces = lattice.faces(k);
  ExtendedRat best;
  for (const auto& w : weights) {
    std::vector<LinearForm> forms;
    forms.reserve(faces.size());
    for (const auto& face : faces) forms.push_back(face_support_form(face, w, h));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        Wedge wedge{scale(forms[i].coeffs, Rat(-1)), forms[i].constant, scale(forms[j].coeffs, Rat(-1)),
                    forms[j].constant};
        auto dist = wedge_distance_impl(h, lattice, wedge, best);
        if (!dist || sgn(*dist) <= 0) continue;
        if (!best || *dist < *best) best = dist;
      }
    }
  }
  return best;
}

Rat choose_eps_bar(const std::vector<ExtendedRat>& eps_k_sq) {
  std::optional<Rat> lowest;
  for (const auto& e : eps_k_sq) {
    if (e && sgn(*e) > 0 && (!lowest || *e < *lowest)) lowest = *e;
  }
  if (!lowest) return Rat(1);
  Rat root;
  if (mpz_perfect_square_p(lowest->get_num_mpz_t()) && mpz_perfect_square_p(lowest->get_den_mpz_t())) {
    Int n, dd;
    mpz_sqrt(n.get_mpz_t(), lowest->get_num_mpz_t());
    mpz_sqrt(dd.get_mpz_t(), lowest->get_den_mpz_t());
    root = make_rat(n, dd);
  } else {
    for (unsigned bits = 16; sgn(root) <= 0; bits += 16) root = sqrt_lower_dyadic(*lowest, bits);
  }
  return root / 2;
}

namespace {

// base^(2p) > m, with base = num/den > 1.
bool exceeds(const Rat& base, unsigned long p, std::size_t m) {
  const Rat power = pow(base, 2 * p);
  return power > Rat(static_cast<unsigned long>(m));
}

}  // namespace

unsigned long choose_exponent(std::size_t m, std::size_t d, const Rat& eps_bar, const Rat& diam_upper,
                              RhoMode mode, const Rat& r_min) {
  if (sgn(eps_bar) <= 0 || sgn(diam_upper) <= 0 || m < 1) {
    throw std::invalid_argument("choose_exponent needs eps_bar > 0, diam_upper > 0, m >= 1");
  }
  const Rat rho = mode == RhoMode::dimension ? Rat(1, static_cast<unsigned long>(d + 1)) : r_min;
  const Rat base = 1 + 2 * eps_bar * rho / diam_upper;
  if (exceeds(base, 1, m)) return 1;
  constexpr unsigned long kLimit = 1ul << 26;
  unsigned long hi = 2;
  while (!exceeds(base, hi, m)) {
    if (hi >= kLimit) throw ResourceError("approximating exponent exceeds " + std::to_string(kLimit));
    hi *= 2;
  }
  unsigned long lo = hi / 2;  // fails; hi succeeds
  while (hi - lo > 1) {
    const unsigned long mid = lo + (hi - lo) / 2;
    (exceeds(base, mid, m) ? hi : lo) = mid;
  }
  return hi;
}

MetricsBundle compute_metrics(const HPolytope& h, const FaceLattice& lattice, const MetricsOptions& options) {
  MetricsBundle out;
  const std::size_t d = h.dim;
  auto centered = recenter(h, lattice.vertices);
  out.shift = centered.shift;

  out.r_min = 1;
  for (const auto& row : centered.shifted.rows) {
    // h(-a) in the shifted frame = h(-a) + <a, t>
    const Rat hm = support_value(lattice.vertices, scale(row.normal, Rat(-1))) + dot(row.normal, out.shift);
    out.h_minus.push_back(hm);
    out.r_min = std::min(out.r_min, Rat(row.rhs / (row.rhs + hm)));
  }

  const auto diam = diameter(lattice.vertices);
  out.diam_sq = diam.diam_sq;
  out.diam_upper = diam.diam_upper;
  if (options.diam_upper) {
    if (*options.diam_upper * *options.diam_upper < out.diam_sq) {
      throw ValidationError("diameter bound " + options.diam_upper->get_str() + " is below the diameter");
    }
    out.diam_upper = *options.diam_upper;
  }

  for (std::size_t k = 0; k < d; ++k) out.eps_k_sq.push_back(face_epsilon_sq(h, lattice, k, weight_sets(d, k)));

  out.eps_bar = choose_eps_bar(out.eps_k_sq);
  if (options.eps_bar) {
    const Rat e2 = *options.eps_bar * *options.eps_bar;
    if (sgn(*options.eps_bar) <= 0) throw ValidationError("eps_bar must be positive");
    for (const auto& e : out.eps_k_sq) {
      if (e && sgn(*e) > 0 && e2 >= *e) {
        throw ValidationError("eps_bar " + options.eps_bar->get_str() + " is not below every eps_k");
      }
    }
    out.eps_bar = *options.eps_bar;
  }

  out.rho_mode = options.rho_mode;
  if (options.rho_mode == RhoMode::dimension) {
    out.rho = Rat(1, static_cast<unsigned long>(d + 1));
    if (out.r_min < out.rho) {
      throw ValidationError("rho mode 'dimension' needs min b_i/(b_i+h(-a^i)) >= 1/(d+1) at the vertex barycenter; got " +
                            out.r_min.get_str());
    }
  } else {
    out.rho = out.r_min;
  }
  out.exponent_p = choose_exponent(h.size(), d, out.eps_bar, out.diam_upper, options.rho_mode, out.r_min);
  return out;
}

}  // namespace polyrep
