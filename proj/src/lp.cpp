#include "simplext/lp.hpp"

#include "simplext/errors.hpp"

namespace simplext {

namespace {

// Dense tableau with an explicit basis.  Bland's rule for both the
// entering and the leaving variable, so termination is guaranteed.
class Tableau {
 public:
  Tableau(const RatMat& a, const RatVec& b, std::size_t num_cols)
      : rows_(a.size()), cols_(num_cols), t_(a.size()), basis_(a.size(), npos) {
    for (std::size_t i = 0; i < rows_; ++i) {
      t_[i] = a[i];
      t_[i].resize(cols_, Rat(0));
      t_[i].push_back(b[i]);
      if (b[i] < 0)
        for (auto& x : t_[i]) x = -x;
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& rhs(std::size_t i) const { return t_[i][cols_]; }
  const Rat& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  std::size_t basis(std::size_t i) const { return basis_[i]; }
  void set_basis(std::size_t i, std::size_t j) { basis_[i] = j; }

  void append_column(const RatVec& col) {
    for (std::size_t i = 0; i < rows_; ++i) t_[i].insert(t_[i].begin() + cols_, col[i]);
    ++cols_;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rat inv = Rat(1) / t_[pr][pc];
    for (auto& x : t_[pr]) x *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || t_[i][pc] == 0) continue;
      const Rat f = t_[i][pc];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[pr][j];
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + i);
    basis_.erase(basis_.begin() + i);
    --rows_;
  }

  // Minimizes cost over the current basic feasible tableau.
  // Returns false when unbounded.
  bool minimize(const RatVec& cost, std::size_t active_cols) {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < active_cols; ++j) {
        Rat r = cost[j];
        for (std::size_t i = 0; i < rows_; ++i)
          if (basis_[i] != npos && basis_[i] < cost.size() && cost[basis_[i]] != 0)
            r -= cost[basis_[i]] * t_[i][j];
        if (r < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      Rat best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave == npos || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const RatVec& cost) const {
    Rat z = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < cost.size()) z += cost[basis_[i]] * t_[i][cols_];
    return z;
  }

  RatVec solution(std::size_t n) const {
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < n) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  std::size_t rows_, cols_;
  RatMat t_;
  std::vector<std::size_t> basis_;
};

// Phase 1: artificial basis, minimize the artificial sum.
// Returns false when the system is infeasible.
bool phase_one(Tableau& t, std::size_t n) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    RatVec col(t.rows(), Rat(0));
    col[i] = 1;
    t.append_column(col);
    t.set_basis(i, n + i);
  }
  RatVec cost(n + t.rows(), Rat(0));
  for (std::size_t j = n; j < cost.size(); ++j) cost[j] = 1;
  t.minimize(cost, n + t.rows());
  if (t.objective(cost) != 0) return false;
  // Pivot leftover artificials out; a fully zero row is redundant.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis(i) < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t.at(i, j) == 0) ++j;
    if (j < n) {
      t.pivot(i, j);
      ++i;
    } else {
      t.drop_row(i);
    }
  }
  return true;
}

}  // namespace

LpResult lp_solve(const RatMat& a, const RatVec& b, const RatVec& c) {
  const std::size_t n = c.size();
  Tableau t(a, b, n);
  if (!phase_one(t, n)) return {LpStatus::Infeasible, Rat(0), {}};
  RatVec cost = c;
  cost.resize(n + a.size(), Rat(0));
  if (!t.minimize(cost, n)) return {LpStatus::Unbounded, Rat(0), {}};
  return {LpStatus::Optimal, t.objective(cost), t.solution(n)};
}

bool lp_feasible(const RatMat& a, const RatVec& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  Tableau t(a, b, n);
  return phase_one(t, n);
}

std::optional<RatVec> lp_feasible_point(const RatMat& ineq_lhs, const RatVec& ineq_rhs,
                                        const RatMat& eq_lhs, const RatVec& eq_rhs,
                                        std::size_t num_vars) {
  const std::size_t mi = ineq_lhs.size(), me = eq_lhs.size();
  const std::size_t cols = 2 * num_vars + mi;  // x = u - w, one slack per inequality
  RatMat a(mi + me, RatVec(cols, Rat(0)));
  RatVec b(mi + me);
  for (std::size_t i = 0; i < mi; ++i) {
    for (std::size_t j = 0; j < num_vars; ++j) {
      a[i][j] = ineq_lhs[i][j];
      a[i][num_vars + j] = -ineq_lhs[i][j];
    }
    a[i][2 * num_vars + i] = 1;
    b[i] = ineq_rhs[i];
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < num_vars; ++j) {
      a[mi + i][j] = eq_lhs[i][j];
      a[mi + i][num_vars + j] = -eq_lhs[i][j];
    }
    b[mi + i] = eq_rhs[i];
  }
  RatVec zero(cols, Rat(0));
  const auto res = lp_solve(a, b, zero);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  RatVec x(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) x[j] = res.solution[j] - res.solution[num_vars + j];
  return x;
}

}  // namespace simplext
