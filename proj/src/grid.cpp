#include "polyrep/grid.hpp"

#include <sstream>

#include "polyrep/errors.hpp"
#include "polyrep/verify.hpp"

namespace polyrep {

namespace {

void check_spec(const GridSpec& spec) {
  if (spec.lo.size() != spec.hi.size() || spec.lo.empty()) throw ValidationError("grid box dimension mismatch");
  if (sgn(spec.step) <= 0) throw ValidationError("grid step must be positive");
}

}  // namespace

std::size_t grid_cell_count(const GridSpec& spec) {
  check_spec(spec);
  Int total = 1;
  for (std::size_t i = 0; i < spec.lo.size(); ++i) {
    if (spec.hi[i] < spec.lo[i]) return 0;
    const Rat span = (spec.hi[i] - spec.lo[i]) / spec.step;
    Int n = span.get_num() / span.get_den();  // floor, span >= 0
    total *= n + 1;
    if (total > kMaxGridCells) {
      throw ResourceError("grid has more than " + std::to_string(kMaxGridCells) + " cells");
    }
  }
  return total.get_ui();
}

void for_each_grid_point(const GridSpec& spec, const std::function<void(const RatVec&)>& visit) {
  if (grid_cell_count(spec) == 0) return;
  const std::size_t d = spec.lo.size();
  RatVec x = spec.lo;
  for (;;) {
    visit(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      x[i] += spec.step;
      if (x[i] <= spec.hi[i]) break;
      x[i] = spec.lo[i];
      if (i == 0) return;
    }
  }
}

std::string grid_eval_csv(const HPolytope& h, const PRepresentation& prep, const GridSpec& spec, GridCounts* counts) {
  const std::size_t d = spec.lo.size();
  if (d != 2 && d != 3) throw ValidationError("grid evaluation supports d = 2 or 3");
  if (h.dim != d || prep.dim != d) throw ValidationError("grid dimension does not match the representation");
  grid_cell_count(spec);

  std::ostringstream out;
  for (std::size_t i = 0; i < d; ++i) out << 'x' << i + 1 << ',';
  for (const auto& pp : prep.products) out << pp.id() << ',';
  out << kEpsilonId << ",member_prep,member_hrep\n";

  GridCounts local;
  for_each_grid_point(spec, [&](const RatVec& x) {
    for (const auto& c : x) out << c.get_str() << ',';
    for (const auto& pp : prep.products) out << product_sign(pp, x) << ',';
    out << -compare_epsilon(prep.epsilon, x).cmp << ',';
    const bool p = member_prep(prep, x).inside;
    const bool q = member_hrep(h, x, false).inside;
    out << p << ',' << q << '\n';
    ++local.cells;
    local.inside_prep += p;
    local.inside_hrep += q;
    local.disagreements += p != q;
  });
  if (counts) *counts = local;
  return out.str();
}

}  // namespace polyrep
