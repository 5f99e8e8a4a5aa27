#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "polyrep/errors.hpp"
#include "polyrep/face_lattice.hpp"
#include "polyrep/io.hpp"

namespace polyrep::fixtures {

// Rows are {a_1, ..., a_d, b}.
inline HPolytope from_rows(std::size_t d, const std::vector<std::vector<long>>& rows) {
  HPolytope h;
  h.dim = d;
  for (const auto& r : rows) {
    HRow row;
    for (std::size_t i = 0; i < d; ++i) row.normal.push_back(Rat(r[i]));
    row.rhs = r[d];
    h.rows.push_back(row);
  }
  return h;
}

inline HPolytope skew_dodecahedron() {
  return from_rows(3, {{0, 3, 2, 5},
                       {0, -3, 2, 6},
                       {2, 0, 3, 5},
                       {2, 0, -3, 4},
                       {3, 2, 0, 5},
                       {-3, 2, 0, 5},
                       {0, -3, -2, 6},
                       {0, 3, -2, 5},
                       {-2, 0, -3, 6},
                       {-2, 0, 3, 5},
                       {-3, -2, 0, 4},
                       {3, -2, 0, 6}});
}

// [-1,1]^d, rows x_i <= 1 then -x_i <= 1 for each i.
inline HPolytope cube(std::size_t d) {
  HPolytope h;
  h.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    h.rows.push_back({unit(d, i), Rat(1)});
    h.rows.push_back({scale(unit(d, i), Rat(-1)), Rat(1)});
  }
  return h;
}

inline HPolytope square() { return cube(2); }

// {x >= 0, sum x <= 1}
inline HPolytope standard_simplex(std::size_t d) {
  HPolytope h;
  h.dim = d;
  for (std::size_t i = 0; i < d; ++i) h.rows.push_back({scale(unit(d, i), Rat(-1)), Rat(0)});
  h.rows.push_back({RatVec(d, Rat(1)), Rat(1)});
  return h;
}

inline HPolytope box(const RatVec& lo, const RatVec& hi) {
  HPolytope h;
  h.dim = lo.size();
  for (std::size_t i = 0; i < h.dim; ++i) {
    h.rows.push_back({unit(h.dim, i), hi[i]});
    h.rows.push_back({scale(unit(h.dim, i), Rat(-1)), -lo[i]});
  }
  return h;
}

inline bool is_valid_simple(const HPolytope& h) {
  try {
    validated_lattice(h);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Simple polygons with 6..12 facets: distinct primitive integer normals in
// angular order, small positive right-hand sides, kept only when every row
// is a facet and no three edges meet.
inline std::vector<HPolytope> random_polygons(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<HPolytope> out;
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    std::vector<std::pair<double, std::pair<long, long>>> dirs;
    while (static_cast<int>(dirs.size()) < n) {
      const long a = std::uniform_int_distribution<long>(-6, 6)(rng);
      const long b = std::uniform_int_distribution<long>(-6, 6)(rng);
      if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
      const double ang = std::atan2(static_cast<double>(b), static_cast<double>(a));
      bool dup = false;
      for (const auto& d : dirs) dup = dup || (d.second.first == a && d.second.second == b);
      if (!dup) dirs.push_back({ang, {a, b}});
    }
    std::sort(dirs.begin(), dirs.end());
    bool spans = true;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const double next = i + 1 < dirs.size() ? dirs[i + 1].first : dirs[0].first + 2 * M_PI;
      spans = spans && next - dirs[i].first < M_PI - 1e-9;
    }
    if (!spans) continue;
    std::vector<std::vector<long>> rows;
    for (const auto& d : dirs) {
      rows.push_back({d.second.first, d.second.second, std::uniform_int_distribution<long>(3, 12)(rng)});
    }
    auto h = from_rows(2, rows);
    if (is_valid_simple(h)) out.push_back(std::move(h));
  }
  return out;
}

inline HPolytope load_data(const std::string& name) {
  return parse_hrep(read_file(std::string(POLYREP_DATA_DIR) + "/" + name));
}

}  // namespace polyrep::fixtures
