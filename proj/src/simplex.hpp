#pragma once

// Internal LP kernel: dense tableau simplex for box-constrained rational
// programs. Not part of the public interface.

#include <utility>
#include <vector>

#include "luk/milp.hpp"

namespace luk::detail {

struct SparseRow {
  std::vector<std::pair<int, Rational>> terms;  // sorted by var id
  Cmp cmp = Cmp::Le;
  Rational rhs;
};

struct Bounds {
  std::vector<Rational> lo, hi;  // structural variables; always finite
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective;        // max of c.x over the feasible box
  std::vector<Rational> x;   // structural values when optimal
};

// Maximizes objective.x subject to rows and lo <= x <= hi. `pivots`
// accumulates across calls; exceeding the limit throws BudgetExceeded.
LpResult solve_lp(const std::vector<SparseRow>& rows, const Bounds& bounds,
                  const std::vector<Rational>& objective, long& pivots,
                  long pivot_limit);

}  // namespace luk::detail
