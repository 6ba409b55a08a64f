#include "simplex.hpp"

#include <stdexcept>

namespace luk::detail {

namespace {

struct ColBound {
  bool has_lo = false, has_hi = false;
  Rational lo, hi;
};

// Bounded-variable primal simplex on a dense tableau. Nonbasic columns
// rest on a bound; a big-M-free phase 1 drives artificial columns to
// zero. Dantzig pricing with a permanent switch to Bland's rule after a
// run of degenerate steps, so the method terminates.
class Tableau {
 public:
  Tableau(const std::vector<SparseRow>& rows, const Bounds& bounds,
          const std::vector<Rational>& objective, long& pivots,
          long pivot_limit)
      : m_(static_cast<int>(rows.size())),
        n_(static_cast<int>(bounds.lo.size())),
        pivots_(pivots),
        pivot_limit_(pivot_limit) {
    ncols_ = n_ + m_;
    cb_.resize(ncols_);
    for (int j = 0; j < n_; ++j)
      cb_[j] = {true, true, bounds.lo[j], bounds.hi[j]};

    T_.assign(m_, std::vector<Rational>(ncols_));
    std::vector<Rational> beta(m_);
    for (int i = 0; i < m_; ++i) {
      const SparseRow& row = rows[i];
      Rational activity;
      for (const auto& [j, c] : row.terms) {
        T_[i][j] = c;
        activity += c * cb_[j].lo;  // structurals start at their lower bound
      }
      int s = n_ + i;
      T_[i][s] = 1;
      switch (row.cmp) {
        case Cmp::Le: cb_[s] = {true, false, Rational(0), Rational(0)}; break;
        case Cmp::Ge: cb_[s] = {false, true, Rational(0), Rational(0)}; break;
        case Cmp::Eq: cb_[s] = {true, true, Rational(0), Rational(0)}; break;
      }
      beta[i] = row.rhs - activity;
    }

    xval_.resize(ncols_);
    row_of_.assign(ncols_, -1);
    basis_.resize(m_);
    for (int j = 0; j < n_; ++j) xval_[j] = cb_[j].lo;
    for (int i = 0; i < m_; ++i) {
      int s = n_ + i;
      basis_[i] = s;
      row_of_[s] = i;
      xval_[s] = beta[i];
    }

    c2_.assign(ncols_, Rational(0));
    for (int j = 0; j < n_ && j < static_cast<int>(objective.size()); ++j)
      c2_[j] = objective[j];
  }

  LpResult run() {
    install_artificials();
    if (nart_ > 0) {
      if (!run_phase(d1_))
        throw std::logic_error("phase-1 objective cannot be unbounded");
      Rational infeasibility;
      for (int a = n_ + m_; a < ncols_; ++a) infeasibility += value_of(a);
      if (infeasibility != 0) return {LpResult::Status::Infeasible, {}, {}};
      // Pin the artificials at zero; basic ones may linger harmlessly.
      for (int a = n_ + m_; a < ncols_; ++a)
        cb_[a] = {true, true, Rational(0), Rational(0)};
    }
    d1_.clear();
    if (!run_phase(d2_)) return {LpResult::Status::Unbounded, {}, {}};

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.x.resize(n_);
    for (int j = 0; j < n_; ++j) res.x[j] = value_of(j);
    for (int j = 0; j < n_; ++j) res.objective += c2_[j] * res.x[j];
    return res;
  }

 private:
  Rational value_of(int j) const { return xval_[j]; }

  bool fixed(int j) const {
    return cb_[j].has_lo && cb_[j].has_hi && cb_[j].lo == cb_[j].hi;
  }
  bool at_lo(int j) const { return cb_[j].has_lo && xval_[j] == cb_[j].lo; }
  bool at_hi(int j) const { return cb_[j].has_hi && xval_[j] == cb_[j].hi; }

  void install_artificials() {
    std::vector<int> violated;
    for (int i = 0; i < m_; ++i) {
      int s = basis_[i];
      const ColBound& b = cb_[s];
      if ((b.has_lo && xval_[s] < b.lo) || (b.has_hi && xval_[s] > b.hi))
        violated.push_back(i);
    }
    nart_ = static_cast<int>(violated.size());
    d2_ = reduce_costs(c2_);
    if (nart_ == 0) return;

    int first_art = ncols_;
    ncols_ += nart_;
    for (auto& row : T_) row.resize(ncols_);
    cb_.resize(ncols_);
    xval_.resize(ncols_);
    row_of_.resize(ncols_, -1);
    c2_.resize(ncols_, Rational(0));
    d2_.resize(ncols_, Rational(0));

    for (int k = 0; k < nart_; ++k) {
      int i = violated[k];
      int s = basis_[i];
      int a = first_art + k;
      // Park the slack on its violated bound; the artificial absorbs the
      // gap. Rows are sign-normalized so the artificial has coefficient 1.
      Rational rest = (cb_[s].has_lo && xval_[s] < cb_[s].lo) ? cb_[s].lo
                                                              : cb_[s].hi;
      Rational gap = xval_[s] - rest;
      if (gap < 0) {
        for (auto& t : T_[i]) if (t != 0) t = -t;
        gap = -gap;
      }
      T_[i][a] = 1;
      cb_[a] = {true, false, Rational(0), Rational(0)};
      xval_[s] = rest;
      row_of_[s] = -1;
      basis_[i] = a;
      row_of_[a] = i;
      xval_[a] = gap;
    }

    // Phase-1 reduced costs of maximize -(sum of artificials).
    std::vector<Rational> c1(ncols_, Rational(0));
    for (int a = first_art; a < ncols_; ++a) c1[a] = Rational(-1);
    d1_ = reduce_costs(c1);
  }

  std::vector<Rational> reduce_costs(const std::vector<Rational>& c) const {
    std::vector<Rational> d = c;
    d.resize(ncols_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (T_[i][j] != 0) d[j] -= cb * T_[i][j];
    }
    return d;
  }

  int pick_entering(const std::vector<Rational>& d) const {
    int best = -1;
    Rational best_mag;
    for (int j = 0; j < ncols_; ++j) {
      if (row_of_[j] >= 0 || fixed(j)) continue;
      bool up = at_lo(j) && d[j] > 0;
      bool down = at_hi(j) && d[j] < 0;
      if (!up && !down) continue;
      if (bland_) return j;
      Rational mag = d[j] < 0 ? Rational(-d[j]) : d[j];
      if (best < 0 || mag > best_mag) {
        best = j;
        best_mag = mag;
      }
    }
    return best;
  }

  // Returns false only on an unbounded ray.
  bool run_phase(std::vector<Rational>& d) {
    while (true) {
      int j = pick_entering(d);
      if (j < 0) return true;
      int sigma = at_lo(j) ? 1 : -1;

      bool own_finite = sigma > 0 ? cb_[j].has_hi : cb_[j].has_lo;
      Rational t_own =
          own_finite ? (sigma > 0 ? cb_[j].hi - xval_[j] : xval_[j] - cb_[j].lo)
                     : Rational(0);

      int leave_row = -1;
      bool blocked = false;
      Rational t_min;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = T_[i][j];
        if (a == 0) continue;
        int bcol = basis_[i];
        Rational delta = -(sigma * a);
        Rational t;
        if (delta > 0) {
          if (!cb_[bcol].has_hi) continue;
          t = (cb_[bcol].hi - xval_[bcol]) / delta;
        } else {
          if (!cb_[bcol].has_lo) continue;
          t = (xval_[bcol] - cb_[bcol].lo) / -delta;
        }
        if (!blocked || t < t_min ||
            (t == t_min && bcol < basis_[leave_row])) {
          blocked = true;
          t_min = t;
          leave_row = i;
        }
      }

      bool flip = own_finite && (!blocked || t_own <= t_min);
      if (!own_finite && !blocked) return false;  // unbounded

      Rational t = flip ? t_own : t_min;
      if (++pivots_ > pivot_limit_)
        throw BudgetExceeded("solver pivot budget exceeded");
      if (t == 0)
        ++degenerate_streak_;
      else
        degenerate_streak_ = 0;
      if (degenerate_streak_ > 40) bland_ = true;

      if (t != 0) {
        for (int i = 0; i < m_; ++i) {
          const Rational& a = T_[i][j];
          if (a == 0) continue;
          xval_[basis_[i]] -= sigma * a * t;
        }
        xval_[j] += sigma * t;
      }

      if (flip) continue;

      // The leaving variable lands exactly on the bound that blocked.
      int r = leave_row;
      int bcol = basis_[r];
      Rational delta_r = -(sigma * T_[r][j]);
      xval_[bcol] = delta_r > 0 ? cb_[bcol].hi : cb_[bcol].lo;

      pivot(r, j, d);
    }
  }

  void pivot(int r, int j, std::vector<Rational>& d) {
    std::vector<Rational>& prow = T_[r];
    Rational piv = prow[j];
    if (piv != 1) {
      Rational inv = 1 / piv;
      for (auto& t : prow)
        if (t != 0) t *= inv;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational g = T_[i][j];
      if (g == 0) continue;
      std::vector<Rational>& row = T_[i];
      for (int k = 0; k < ncols_; ++k)
        if (prow[k] != 0) row[k] -= g * prow[k];
    }
    auto fold_costs = [&](std::vector<Rational>& costs) {
      if (costs.empty()) return;
      Rational g = costs[j];
      if (g == 0) return;
      for (int k = 0; k < ncols_; ++k)
        if (prow[k] != 0) costs[k] -= g * prow[k];
    };
    fold_costs(d1_);
    fold_costs(d2_);
    if (&d != &d1_ && &d != &d2_) fold_costs(d);

    row_of_[basis_[r]] = -1;
    basis_[r] = j;
    row_of_[j] = r;
  }

  int m_, n_, ncols_ = 0;
  std::vector<std::vector<Rational>> T_;
  std::vector<ColBound> cb_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<Rational> xval_;
  std::vector<Rational> c2_, d1_, d2_;
  bool bland_ = false;
  int degenerate_streak_ = 0;
  long& pivots_;
  long pivot_limit_;
  int nart_ = 0;
};

}  // namespace

LpResult solve_lp(const std::vector<SparseRow>& rows, const Bounds& bounds,
                  const std::vector<Rational>& objective, long& pivots,
                  long pivot_limit) {
  for (std::size_t j = 0; j < bounds.lo.size(); ++j)
    if (bounds.lo[j] > bounds.hi[j])
      return {LpResult::Status::Infeasible, {}, {}};

  Tableau tab(rows, bounds, objective, pivots, pivot_limit);
  LpResult res = tab.run();

  if (res.status == LpResult::Status::Optimal) {
    // The returned point must satisfy the original rows exactly.
    for (const SparseRow& row : rows) {
      Rational lhs;
      for (const auto& [j, c] : row.terms) lhs += c * res.x[j];
      bool ok = row.cmp == Cmp::Le   ? lhs <= row.rhs
                : row.cmp == Cmp::Ge ? lhs >= row.rhs
                                     : lhs == row.rhs;
      if (!ok) throw std::logic_error("simplex returned an infeasible point");
    }
  }
  return res;
}

}  // namespace luk::detail
