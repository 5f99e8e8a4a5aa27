#include "polyrep/lp.hpp"

#include <limits>

namespace polyrep {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(const RatMatrix& a, const RatVec& b, std::size_t dim)
      : dim_(dim), rows_(a.size()) {
    std::size_t artificials = 0;
    for (const auto& bi : b) artificials += sgn(bi) < 0 ? 1 : 0;
    first_slack_ = 2 * dim_;
    first_art_ = first_slack_ + rows_;
    cols_ = first_art_ + artificials;
    t_.assign(rows_, RatVec(cols_ + 1, Rat(0)));
    basis_.assign(rows_, kNone);
    std::size_t art = first_art_;
    for (std::size_t r = 0; r < rows_; ++r) {
      const int flip = sgn(b[r]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < dim_; ++j) {
        t_[r][j] = flip * a[r][j];
        t_[r][dim_ + j] = -flip * a[r][j];
      }
      t_[r][first_slack_ + r] = flip;
      t_[r][cols_] = flip * b[r];
      if (flip < 0) {
        t_[r][art] = 1;
        basis_[r] = art++;
      } else {
        basis_[r] = first_slack_ + r;
      }
    }
    allowed_.assign(cols_, true);
  }

  // Maximizes cost . v over the current tableau. Returns false when unbounded
  // (entering column stored in unbounded_col_).
  bool maximize(const RatVec& cost) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_ && enter == kNone; ++j) {
        if (!allowed_[j] || is_basic(j)) continue;
        Rat reduced = cost[j];
        for (std::size_t r = 0; r < rows_; ++r) {
          if (sgn(t_[r][j]) != 0) reduced -= cost[basis_[r]] * t_[r][j];
        }
        if (sgn(reduced) > 0) enter = j;
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(t_[r][enter]) <= 0) continue;
        Rat ratio = t_[r][cols_] / t_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == kNone) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = 1 / t_[row][col];
    for (auto& v : t_[row]) v *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn(t_[r][col]) == 0) continue;
      const Rat f = t_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (sgn(t_[row][c]) != 0) t_[r][c] -= f * t_[row][c];
      }
    }
    basis_[row] = col;
  }

  // Pivots zero-level artificials out of the basis and bans artificial columns.
  void retire_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (sgn(t_[r][j]) != 0) {
          pivot(r, j);
          break;
        }
      }
      // A row left with an artificial basic is redundant; its rhs is zero and
      // it never constrains an entering column because all entries vanish.
    }
    for (std::size_t j = first_art_; j < cols_; ++j) allowed_[j] = false;
  }

  RatVec values() const {
    RatVec v(cols_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r) v[basis_[r]] = t_[r][cols_];
    return v;
  }

  RatVec ray() const {
    RatVec v(cols_, Rat(0));
    v[unbounded_col_] = 1;
    for (std::size_t r = 0; r < rows_; ++r) v[basis_[r]] = -t_[r][unbounded_col_];
    return v;
  }

  RatVec to_x(const RatVec& v) const {
    RatVec x(dim_);
    for (std::size_t j = 0; j < dim_; ++j) x[j] = v[j] - v[dim_ + j];
    return x;
  }

  std::size_t cols() const { return cols_; }
  std::size_t first_art() const { return first_art_; }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::size_t dim_;
  std::size_t rows_;
  std::size_t cols_ = 0;
  std::size_t first_slack_ = 0;
  std::size_t first_art_ = 0;
  std::size_t unbounded_col_ = kNone;
  RatMatrix t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpResult lp_solve(const RatVec& objective, const RatMatrix& a, const RatVec& b, Sense sense) {
  const std::size_t dim = objective.size();
  Tableau tab(a, b, dim);
  LpResult result;

  RatVec phase1(tab.cols(), Rat(0));
  for (std::size_t j = tab.first_art(); j < tab.cols(); ++j) phase1[j] = -1;
  tab.maximize(phase1);
  const RatVec v1 = tab.values();
  for (std::size_t j = tab.first_art(); j < tab.cols(); ++j) {
    if (sgn(v1[j]) != 0) {
      result.status = LpStatus::infeasible;
      return result;
    }
  }
  tab.retire_artificials();

  const int s = sense == Sense::maximize ? 1 : -1;
  RatVec cost(tab.cols(), Rat(0));
  for (std::size_t j = 0; j < dim; ++j) {
    cost[j] = s * objective[j];
    cost[dim + j] = -s * objective[j];
  }
  if (!tab.maximize(cost)) {
    result.status = LpStatus::unbounded;
    result.witness = tab.to_x(tab.ray());
    return result;
  }
  result.status = LpStatus::optimal;
  result.witness = tab.to_x(tab.values());
  result.optimum = dot(objective, result.witness);
  return result;
}

bool lp_feasible(const RatMatrix& a, const RatVec& b, RatVec* point) {
  if (a.empty()) return true;
  const LpResult r = lp_solve(zeros(a[0].size()), a, b, Sense::maximize);
  if (r.status != LpStatus::optimal) return false;
  if (point) *point = r.witness;
  return true;
}

}  // namespace polyrep
