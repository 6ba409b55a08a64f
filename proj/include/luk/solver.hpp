#pragma once

#include <optional>

#include "luk/milp.hpp"

namespace luk {

struct Encoded {
  MilpProblem problem;
  VarId root;  // continuous variable carrying the objective formula's value
};

// Hajek's reduction of standard-algebra semantics to mixed integer
// constraints: every subformula value is pinned by a continuous variable,
// disjunctive pieces by one fresh binary each, powers and multiples by
// repeated squaring/doubling chains so sizes stay polynomial in |n|.
// Axiom roots are constrained to 1; the objective is the root variable
// (direction left to the caller, minimize by default).
Encoded encode(const Theory& constraints_as_true, const FormulaPtr& objective);

// v with evaluate(f, v) = 1, if any: maximize the root and test for 1.
std::optional<Valuation> satisfiable(const FormulaPtr& f, const Budget& b = {});

struct Consequence {
  bool holds = false;
  std::optional<Valuation> countermodel;  // all axioms 1, f below 1
  std::optional<Rational> value;          // f's value at the countermodel
};

// T entails f over the standard algebra iff the minimum of f over models
// of T is 1 (or T has no model).
Consequence decide_consequence(const Theory& t, const FormulaPtr& f,
                               const Budget& b = {});

// inf { v(f) | v model of T }, attained exactly; 1 when T has no model.
Rational truth_degree(const Theory& t, const FormulaPtr& f, const Budget& b = {});

}  // namespace luk
