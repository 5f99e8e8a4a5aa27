#include "polyrep/lifts.hpp"

#include <stdexcept>

#include "polyrep/errors.hpp"

namespace polyrep {

std::vector<SparsePoly> closed_form_rep(ClosedForm kind, std::size_t d) {
  if (d == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<SparsePoly> out;
  const auto one = SparsePoly::constant(d, Rat(1));
  for (std::size_t i = 0; i < d; ++i) {
    const auto xi = SparsePoly::variable(d, i);
    if (kind == ClosedForm::cube) {
      out.push_back(one - xi * xi);
      continue;
    }
    SparsePoly tail = one;
    for (std::size_t j = i; j < d; ++j) tail = tail - SparsePoly::variable(d, j);
    out.push_back(xi * tail);
  }
  return out;
}

std::vector<SparsePoly> prism_lift(const std::vector<SparsePoly>& base) {
  if (base.empty()) throw std::invalid_argument("prism lift needs at least one base polynomial");
  const std::size_t d = base.front().num_vars() + 1;
  std::vector<SparsePoly> out;
  for (const auto& p : base) out.push_back(p.embed(d));
  const auto xd = SparsePoly::variable(d, d - 1);
  out.push_back(xd * (SparsePoly::constant(d, Rat(1)) - xd));
  return out;
}

RatVec AffineMap::apply(const RatVec& x) const {
  RatVec z = offset;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += dot(linear[i], x);
  return z;
}

std::vector<SparsePoly> AffineMap::as_polys() const {
  std::vector<SparsePoly> out;
  for (std::size_t i = 0; i < offset.size(); ++i) out.push_back(SparsePoly::from_linear({offset[i], linear[i]}));
  return out;
}

std::vector<SparsePoly> pyramid_lift_normalized(const std::vector<SparsePoly>& base) {
  if (base.empty()) throw std::invalid_argument("pyramid lift needs at least one base polynomial");
  const std::size_t d = base.front().num_vars() + 1;
  unsigned p = 0;
  for (const auto& q : base) p = std::max(p, q.total_degree());

  std::vector<SparsePoly> head;
  for (std::size_t i = 0; i + 1 < d; ++i) head.push_back(SparsePoly::variable(d, i));
  const auto one = SparsePoly::constant(d, Rat(1));
  const auto xd = SparsePoly::variable(d, d - 1);
  const auto one_minus = one - xd;

  std::vector<SparsePoly> out;
  for (const auto& q : base) out.push_back(q.homogenize(head, one_minus, p));
  SparsePoly norm(d);
  for (const auto& xi : head) norm = norm + xi * xi;
  out.push_back(xd * (one_minus - xd * norm));
  return out;
}

PyramidLift pyramid_lift(const std::vector<SparsePoly>& base, const std::vector<RatVec>& base_vertices,
                         const RatVec& apex) {
  if (base.empty() || base_vertices.empty()) throw ValidationError("pyramid base is empty");
  const std::size_t d = apex.size();
  if (d < 2 || base.front().num_vars() + 1 != d) throw ValidationError("apex dimension does not match base");
  const Rat height = apex[d - 1];
  if (sgn(height) == 0) throw ValidationError("apex lies in the base hyperplane");

  RatVec center = zeros(d - 1);
  for (const auto& v : base_vertices) {
    if (v.size() != d - 1) throw ValidationError("base vertex dimension mismatch");
    center = add(center, v);
  }
  center = scale(center, Rat(1, static_cast<unsigned long>(base_vertices.size())));
  Rat max_norm_sq = 0;
  for (const auto& v : base_vertices) max_norm_sq = std::max(max_norm_sq, norm_sq(sub(v, center)));
  if (sgn(max_norm_sq) == 0) throw ValidationError("pyramid base is a single point");
  // Integer radius bound keeps the map rational; bits = 0 gives the least
  // integer n with n^2 >= max_norm_sq.
  const Rat radius = sqrt_upper_dyadic(max_norm_sq, 0);
  const Rat s = 1 / radius;

  // z_d = x_d / h,  z' = s (x' - center - z_d (apex' - center))
  AffineMap map;
  map.linear.assign(d, zeros(d));
  map.offset = zeros(d);
  map.linear[d - 1][d - 1] = 1 / height;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    map.linear[i][i] = s;
    map.linear[i][d - 1] = -s * (apex[i] - center[i]) / height;
    map.offset[i] = -s * center[i];
  }

  // Base in the normalized frame: q(z') = p(center + z' / s).
  std::vector<SparsePoly> unscale;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    LinearForm f{center[i], zeros(d - 1)};
    f.coeffs[i] = radius;
    unscale.push_back(SparsePoly::from_linear(f));
  }
  std::vector<SparsePoly> normalized_base;
  for (const auto& p : base) normalized_base.push_back(p.compose(unscale));

  PyramidLift out;
  out.to_normalized = map;
  out.scale = s;
  out.center = center;
  out.normalized = pyramid_lift_normalized(normalized_base);
  const auto coords = map.as_polys();
  for (const auto& q : out.normalized) out.polys.push_back(q.compose(coords));
  return out;
}

}  // namespace polyrep
