#include "polyrep/linalg.hpp"

namespace polyrep {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rat inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve_square_system(const RatMatrix& m, const RatVec& rhs) {
  const std::size_t n = m.size();
  RatMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m[i];
    aug[i].push_back(rhs[i]);
  }
  // Forward elimination with back substitution; cheaper than full RREF.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(aug[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(aug[r][col]) == 0) continue;
      const Rat f = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  RatVec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat s = aug[i][n];
    for (std::size_t c = i + 1; c < n; ++c) s -= aug[i][c] * x[c];
    x[i] = s / aug[i][i];
  }
  return x;
}

std::vector<RatVec> kernel_basis(const RatMatrix& a, std::size_t cols) {
  RatMatrix m = a;
  const auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RatMatrix& a) {
  if (a.empty()) return 0;
  RatMatrix m = a;
  return row_reduce(m, m[0].size()).size();
}

std::size_t affine_rank(const std::vector<RatVec>& points) {
  if (points.size() < 2) return 0;
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(diffs);
}

}  // namespace polyrep
