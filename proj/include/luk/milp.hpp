#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "luk/semantics.hpp"

namespace luk {

using VarId = int;

enum class Cmp { Le, Eq, Ge };

// Finite linear form with at least one nonzero coefficient, compared
// against an exact rational bound.
struct LinearConstraint {
  std::map<VarId, Rational> coeffs;
  Cmp cmp = Cmp::Le;
  Rational rhs;
};

struct LinearExpr {
  std::map<VarId, Rational> coeffs;
  Rational constant;
};

enum class Direction { Minimize, Maximize };

struct MilpVar {
  std::string name;
  bool binary = false;
  Rational lo = Rational(0);
  Rational hi = Rational(1);
};

// Mixed binary/continuous program over the unit box.
class MilpProblem {
 public:
  VarId add_var(std::string name, bool binary = false);
  void fix(VarId v, const Rational& value);
  void set_bounds(VarId v, const Rational& lo, const Rational& hi);
  void add(LinearConstraint c);
  void set_objective(LinearExpr e, Direction d);

  const std::vector<MilpVar>& vars() const { return vars_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  const LinearExpr& objective() const { return objective_; }
  Direction direction() const { return direction_; }

  // Formula variables map bijectively onto a subset of the continuous
  // variables; the witness of an optimization is read off through it.
  void bind_formula_var(const Variable& v, VarId id);
  const std::map<Variable, VarId>& formula_vars() const { return formula_vars_; }

 private:
  std::vector<MilpVar> vars_;
  std::vector<LinearConstraint> rows_;
  LinearExpr objective_;
  Direction direction_ = Direction::Minimize;
  std::map<Variable, VarId> formula_vars_;
};

struct Budget {
  long pivot_limit = 20'000'000;
  long node_limit = 500'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimizationOutcome {
  enum class Status { Optimal, Infeasible };
  Status status = Status::Infeasible;
  Rational value;                  // when optimal
  Valuation witness;               // formula variables only
  std::vector<Rational> solution;  // every declared variable, by VarId
  long pivots = 0;
  long nodes = 0;

  bool optimal() const { return status == Status::Optimal; }
};

// Exact optimum by rational simplex with branch and bound on the binary
// variables. Never returns an unproven answer: resource exhaustion
// throws BudgetExceeded, and every optimal outcome is rechecked by
// substitution into the original constraints.
OptimizationOutcome optimize(const MilpProblem& p, const Budget& budget = {});

// Line-oriented text form, one constraint per line, rationals as p/q.
void emit_problem(const MilpProblem& p, std::ostream& os);

}  // namespace luk
