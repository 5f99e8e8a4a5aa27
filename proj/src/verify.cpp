#include "polyrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "polyrep/errors.hpp"

namespace polyrep {

Rat eval_product(const ProductPoly& pp, const RatVec& x) {
  Rat r = 1;
  for (const auto& f : pp.factors) {
    r *= f.eval(x);
    if (sgn(r) == 0) break;
  }
  return r;
}

int product_sign(const ProductPoly& pp, const RatVec& x) {
  int s = 1;
  for (const auto& f : pp.factors) {
    const int fs = sgn(f.eval(x));
    if (fs == 0) return 0;
    if (fs < 0) s = -s;
  }
  return s;
}

Rat eval_epsilon_exact(const EpsilonPoly& ep, const RatVec& x) {
  std::vector<Rat> bases;
  std::size_t bits = 0;
  for (std::size_t i = 0; i < ep.terms.size(); ++i) {
    bases.push_back(ep.base_form(i).eval(x));
    bits += ep.two_p * bit_size(bases.back());
  }
  if (bits > kExactBitLimit) {
    throw ResourceError("exact evaluation refused: about " + std::to_string(bits) + " bits exceeds " +
                        std::to_string(kExactBitLimit));
  }
  Rat sum = 0;
  for (const auto& v : bases) sum += pow(v, ep.two_p);
  return sum * ep.weight;
}

namespace {

// log|z| with an absolute error bound. The mantissa is truncated (relative
// error below 2^-52) and e*ln2 may be large, so the error grows with the
// exponent, not with the result.
struct LogValue {
  double value = 0;
  double err = 0;
};

constexpr double kUnit = 0x1p-52;

LogValue log_abs(const Int& z) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  const double value = std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
  return {value, 8 * kUnit * (1 + std::fabs(static_cast<double>(e)))};
}

// Numerator and denominator errors add: their logs can be huge while the
// difference is small.
LogValue log_abs(const Rat& q) {
  const auto n = log_abs(q.get_num());
  const auto d = log_abs(q.get_den());
  const double value = n.value - d.value;
  return {value, n.err + d.err + 2 * kUnit * std::fabs(value)};
}

}  // namespace

std::optional<int> guarded_epsilon_compare(const EpsilonPoly& ep, const RatVec& x) {
  if (sgn(ep.weight) == 0) return -1;
  const double u = kUnit;
  const double two_p = static_cast<double>(ep.two_p);
  const auto lw = log_abs(ep.weight);
  const double m = static_cast<double>(ep.terms.size());
  double lo = 0;
  double hi = 0;
  for (std::size_t i = 0; i < ep.terms.size(); ++i) {
    const Rat v = ep.base_form(i).eval(x);
    if (sgn(v) == 0) continue;
    const auto lv = log_abs(v);
    const double lt = two_p * lv.value + lw.value;
    // Propagated log errors, then rounding of the product and the sum.
    const double err = 2 * (two_p * lv.err + lw.err + 4 * u * (two_p * std::fabs(lv.value) + std::fabs(lw.value)));
    if (lt - err > 1e-3) return 1;  // one term alone exceeds 1
    lo += std::exp(lt - err);
    hi += std::exp(lt + err);
  }
  lo *= 1 - (m + 8) * u;
  hi = hi * (1 + (m + 8) * u) + m * 1e-300;
  if (lo > 1) return 1;
  if (hi < 1) return -1;
  return std::nullopt;
}

EpsilonVerdict compare_epsilon(const EpsilonPoly& ep, const RatVec& x, EvalMode mode) {
  if (mode == EvalMode::guarded) {
    if (auto c = guarded_epsilon_compare(ep, x)) return {*c, true};
  }
  const int c = cmp(eval_epsilon_exact(ep, x), 1);
  return {(c > 0) - (c < 0), false};
}

MembershipVerdict member_hrep(const HPolytope& h, const RatVec& x, bool all_violations) {
  MembershipVerdict out;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    const Rat s = h.rows[i].slack(x);
    if (sgn(s) >= 0) continue;
    out.inside = false;
    out.violated.push_back({"row_" + std::to_string(i + 1), s});
    if (!all_violations) break;
  }
  return out;
}

MembershipVerdict member_prep(const PRepresentation& prep, const RatVec& x, const MemberOptions& options) {
  MembershipVerdict out;
  auto check_product = [&](const ProductPoly& pp) {
    if (product_sign(pp, x) >= 0) return true;
    out.inside = false;
    out.violated.push_back({pp.id(), options.values ? std::optional<Rat>(eval_product(pp, x)) : std::nullopt});
    return options.all_violations;
  };
  for (const auto& pp : prep.products)
    if (pp.k >= 1 && !check_product(pp)) return out;

  const auto eps = compare_epsilon(prep.epsilon, x, options.epsilon_mode);
  if (eps.cmp > 0) {
    out.inside = false;
    std::optional<Rat> value;
    if (options.values) {
      try {
        value = eval_epsilon_exact(prep.epsilon, x);
      } catch (const ResourceError&) {
      }
    }
    out.violated.push_back({kEpsilonId, value});
    if (!options.all_violations) return out;
  }

  for (const auto& pp : prep.products)
    if (pp.k == 0 && !check_product(pp)) return out;
  return out;
}

MembershipVerdict member_polys(const std::vector<SparsePoly>& polys, const RatVec& x,
                               const std::vector<std::string>& ids) {
  MembershipVerdict out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Rat v = polys[i].eval(x);
    if (sgn(v) >= 0) continue;
    out.inside = false;
    out.violated.push_back({i < ids.size() ? ids[i] : "q_" + std::to_string(i + 1), v});
  }
  return out;
}

const char* to_string(SampleClass c) {
  switch (c) {
    case SampleClass::interior:
      return "interior";
    case SampleClass::boundary:
      return "boundary";
    case SampleClass::near_outside:
      return "near-outside";
    case SampleClass::far_outside:
      return "far-outside";
    case SampleClass::random_box:
      return "random-box";
  }
  return "unknown";
}

SampleConfig SampleConfig::with_total(std::size_t total, std::uint64_t seed) {
  SampleConfig c;
  c.seed = seed;
  c.interior = total * 3 / 10;
  c.boundary = total / 10;
  c.near_outside = total / 5;
  c.random_box = total - c.interior - c.boundary - c.near_outside;
  return c;
}

std::vector<SampleFace> sample_faces(const FaceLattice& lattice) {
  std::vector<SampleFace> out;
  for (const auto& level : lattice.faces_by_dim)
    for (const auto& f : level) out.push_back({f.vertex_ids, f.facets});
  return out;
}

std::vector<SampleFace> sample_faces(const HPolytope& h, const std::vector<Vertex>& vertices) {
  std::vector<SampleFace> out;
  for (std::size_t id = 0; id < vertices.size(); ++id) out.push_back({{id}, vertices[id].facets});
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    SampleFace f;
    f.facets = {i};
    for (std::size_t id = 0; id < vertices.size(); ++id) {
      const auto& fs = vertices[id].facets;
      if (std::find(fs.begin(), fs.end(), i) != fs.end()) f.vertex_ids.push_back(id);
    }
    if (!f.vertex_ids.empty()) out.push_back(std::move(f));
  }
  return out;
}

namespace {

using Rng = std::mt19937_64;

constexpr unsigned kGridBits = 20;

std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// k / 2^20 for uniform k in [0, 2^20].
Rat random_fraction(Rng& rng) {
  Int den = 1;
  den <<= kGridBits;
  return make_rat(Int(static_cast<unsigned long>(uniform_int(rng, 0, 1ul << kGridBits))), den);
}

// Convex combination with positive, occasionally very uneven, weights.
RatVec random_convex(Rng& rng, const std::vector<Vertex>& vertices, const std::vector<std::size_t>& ids) {
  const std::size_t d = vertices.front().coords.size();
  RatVec p = zeros(d);
  Rat total = 0;
  for (auto id : ids) {
    const Rat w = 1 + static_cast<unsigned long>(uniform_int(rng, 0, 255) << uniform_int(rng, 0, 12));
    p = add(p, scale(vertices[id].coords, w));
    total += w;
  }
  return scale(p, 1 / total);
}

RatVec barycenter(const std::vector<Vertex>& vertices, const std::vector<std::size_t>& ids) {
  RatVec p = zeros(vertices.front().coords.size());
  for (auto id : ids) p = add(p, vertices[id].coords);
  return scale(p, Rat(1, static_cast<unsigned long>(ids.size())));
}

// Step of length at most (and close to) t along direction a.
RatVec step_along(const RatVec& a, const Rat& t) {
  return scale(a, t / sqrt_upper_dyadic(norm_sq(a), 10));
}

struct Box {
  RatVec lo, hi;
};

Box bounding_box(const std::vector<Vertex>& vertices) {
  Box b{vertices.front().coords, vertices.front().coords};
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      b.lo[i] = std::min(b.lo[i], v.coords[i]);
      b.hi[i] = std::max(b.hi[i], v.coords[i]);
    }
  }
  return b;
}

}  // namespace

std::vector<Sample> generate_samples(const HPolytope& h, const std::vector<Vertex>& vertices,
                                     const std::vector<SampleFace>& faces, const Rat& step,
                                     const SampleConfig& config) {
  if (vertices.empty()) throw ValidationError("sampling needs at least one vertex");
  const std::size_t d = h.dim;
  std::vector<Sample> out;
  auto rng_for_next = [&] { return Rng(config.seed + out.size()); };
  const std::array<Rat, 4> steps{step / 4, step / 2, 2 * step, 4 * step};

  std::vector<std::size_t> all_ids(vertices.size());
  for (std::size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = i;
  for (std::size_t n = 0; n < config.interior; ++n) {
    auto rng = rng_for_next();
    out.push_back({SampleClass::interior, random_convex(rng, vertices, all_ids)});
  }

  for (const auto& f : faces) out.push_back({SampleClass::boundary, barycenter(vertices, f.vertex_ids)});
  for (std::size_t n = 0; n < config.boundary && !faces.empty(); ++n) {
    auto rng = rng_for_next();
    const auto& f = faces[uniform_int(rng, 0, faces.size() - 1)];
    out.push_back({SampleClass::boundary, random_convex(rng, vertices, f.vertex_ids)});
  }

  for (const auto& f : faces) {
    const RatVec base = barycenter(vertices, f.vertex_ids);
    std::vector<RatVec> dirs;
    RatVec sum = zeros(d);
    for (auto i : f.facets) {
      dirs.push_back(h.rows[i].normal);
      sum = add(sum, h.rows[i].normal);
    }
    // Pair sums point into regions beyond exactly two facets, where only the
    // lower-level products can separate.
    if (f.facets.size() > 2) {
      for (std::size_t i = 0; i < f.facets.size(); ++i)
        for (std::size_t j = i + 1; j < f.facets.size(); ++j)
          dirs.push_back(add(h.rows[f.facets[i]].normal, h.rows[f.facets[j]].normal));
    }
    if (f.facets.size() > 1) dirs.push_back(sum);
    std::erase_if(dirs, [](const RatVec& a) { return sgn(norm_sq(a)) == 0; });
    for (const auto& a : dirs)
      for (const auto& t : steps) out.push_back({SampleClass::near_outside, add(base, step_along(a, t))});
  }
  for (std::size_t n = 0; n < config.near_outside && !faces.empty(); ++n) {
    auto rng = rng_for_next();
    const auto& f = faces[uniform_int(rng, 0, faces.size() - 1)];
    const RatVec base = random_convex(rng, vertices, f.vertex_ids);
    RatVec dir = zeros(d);
    for (auto i : f.facets) dir = add(dir, scale(h.rows[i].normal, static_cast<unsigned long>(uniform_int(rng, 0, 4))));
    if (uniform_int(rng, 0, 1)) {
      for (auto& e : dir) e += static_cast<long>(uniform_int(rng, 0, 6)) - 3;
    }
    if (sgn(norm_sq(dir)) == 0) dir = h.rows[f.facets.front()].normal;
    const Rat t = steps[uniform_int(rng, 0, 3)] * (Rat(1, 2) + random_fraction(rng) / 2);
    out.push_back({SampleClass::near_outside, add(base, step_along(dir, t))});
  }

  const Box box = bounding_box(vertices);
  RatVec center = scale(add(box.lo, box.hi), Rat(1, 2));
  RatVec half = sub(box.hi, box.lo);  // doubled box half-width
  for (auto& e : half)
    if (sgn(e) == 0) e = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    RatVec p = center;
    for (std::size_t i = 0; i < d; ++i) p[i] += (mask >> i & 1) ? half[i] : -half[i];
    out.push_back({SampleClass::far_outside, p});
  }

  for (std::size_t n = 0; n < config.random_box; ++n) {
    auto rng = rng_for_next();
    RatVec p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = center[i] - half[i] + 2 * half[i] * random_fraction(rng);
    out.push_back({SampleClass::random_box, p});
  }
  return out;
}

std::size_t EquivalenceReport::total() const {
  std::size_t n = 0;
  for (auto c : per_class) n += c;
  return n;
}

std::string EquivalenceReport::summary() const {
  std::ostringstream out;
  out << "samples " << total() << " (";
  for (std::size_t i = 0; i < kSampleClasses; ++i) {
    out << (i ? ", " : "") << to_string(static_cast<SampleClass>(i)) << ' ' << per_class[i] << " ["
        << inside_per_class[i] << " inside]";
  }
  out << "), disagreements " << disagreements.size();
  return out.str();
}

EquivalenceReport compare_on_samples(const std::vector<Sample>& samples, const Membership& reference,
                                     const Membership& candidate) {
  EquivalenceReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const auto c = static_cast<std::size_t>(s.cls);
    const bool r = reference(s.point);
    const bool p = candidate(s.point);
    ++report.per_class[c];
    if (r) ++report.inside_per_class[c];
    if (r != p) report.disagreements.push_back({i, s.cls, s.point, r, p});
  }
  return report;
}

EquivalenceReport equivalence_test(const HPolytope& h, const FaceLattice& lattice, const PRepresentation& prep,
                                   const SampleConfig& config) {
  const auto samples = generate_samples(h, lattice.vertices, sample_faces(lattice), prep.metadata.eps_bar, config);
  return compare_on_samples(
      samples, [&](const RatVec& x) { return member_hrep(h, x, false).inside; },
      [&](const RatVec& x) { return member_prep(prep, x).inside; });
}

std::string StructuralReport::summary() const {
  std::ostringstream out;
  out << "facet-factor " << (facet_factor ? "ok" : "FAILED") << ", face-vanishing "
      << (face_vanishing ? "ok" : "FAILED") << ", epsilon-on-vertices " << (epsilon_vertices ? "ok" : "FAILED");
  for (const auto& f : failures) out << "\n  " << f;
  return out.str();
}

StructuralReport structural_checks(const HPolytope& h, const FaceLattice& lattice, const PRepresentation& prep,
                                   std::uint64_t seed) {
  StructuralReport report;
  const std::size_t d = h.dim;

  const ProductPoly* top = nullptr;
  for (const auto& pp : prep.products)
    if (pp.k + 1 == d) top = &pp;
  if (!top) {
    report.facet_factor = false;
    report.failures.push_back("no product over the facets");
  } else {
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
      const auto form = facet_form(h.rows[i]);
      if (std::find(top->factors.begin(), top->factors.end(), form) == top->factors.end()) {
        report.facet_factor = false;
        report.failures.push_back("facet form of row " + std::to_string(i + 1) + " " + form.to_string() +
                                  " missing from " + top->id());
      }
    }
  }

  std::uint64_t counter = 0;
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& face : lattice.faces(k)) {
      std::vector<RatVec> points{lattice.barycenter(face)};
      if (face.vertex_ids.size() > 1) {
        for (int n = 0; n < 3; ++n) {
          Rng rng(seed + counter++);
          RatVec p = zeros(d);
          long total = 0;
          std::vector<long> w;
          for (std::size_t j = 0; j < face.vertex_ids.size(); ++j) {
            w.push_back(static_cast<long>(uniform_int(rng, 0, 8)) - 4);
            total += w.back();
          }
          if (total == 0) {
            ++w.front();
            ++total;
          }
          for (std::size_t j = 0; j < w.size(); ++j)
            p = add(p, scale(lattice.vertices[face.vertex_ids[j]].coords, make_rat(Int(w[j]), Int(total))));
          points.push_back(std::move(p));
        }
      }
      for (const auto& pp : prep.products) {
        if (pp.k < k) continue;
        for (const auto& x : points) {
          if (product_sign(pp, x) != 0) {
            report.face_vanishing = false;
            std::string facets;
            for (auto i : face.facets) facets += (facets.empty() ? "" : ",") + std::to_string(i + 1);
            report.failures.push_back(pp.id() + " does not vanish at " + to_string(x) + " on the " +
                                      std::to_string(k) + "-face with facets {" + facets + "}");
          }
        }
      }
    }
  }

  for (const auto& v : lattice.vertices) {
    if (compare_epsilon(prep.epsilon, v.coords, EvalMode::exact).cmp > 0) {
      report.epsilon_vertices = false;
      report.failures.push_back("p_eps > 1 at vertex " + to_string(v.coords));
    }
  }
  return report;
}

std::vector<RatVec> outward_points(const HPolytope& h, const FaceLattice& lattice, const Rat& distance,
                                   std::size_t count, std::uint64_t seed) {
  const auto& facets = lattice.faces(h.dim - 1);
  std::vector<RatVec> out;
  for (std::size_t n = 0; n < count; ++n) {
    Rng rng(seed + n);
    const auto& f = facets[uniform_int(rng, 0, facets.size() - 1)];
    const auto& a = h.rows[f.facets.front()].normal;
    const RatVec y = random_convex(rng, lattice.vertices, f.vertex_ids);
    // |s a| >= distance because the dyadic root is a lower bound for |a|.
    unsigned bits = 10;
    Rat root = sqrt_lower_dyadic(norm_sq(a), bits);
    while (sgn(root) == 0) root = sqrt_lower_dyadic(norm_sq(a), bits += 10);
    const Rat s = distance / root;
    out.push_back(add(y, scale(a, s)));
  }
  return out;
}

}  // namespace polyrep
