#pragma once

#include "luk/constants.hpp"

namespace luk {

// An instance of the DEF problem: does `formula` pin `var` to `value` on
// every standard valuation satisfying it?
struct DefInstance {
  FormulaPtr formula;
  Variable var;
  Rational value;
};

enum class DefStatus { Defines, Unsatisfiable, Leaks };

struct DefCheckResult {
  DefStatus status = DefStatus::Unsatisfiable;
  // A satisfying valuation with v(var) != value, when the instance leaks.
  std::optional<Valuation> witness;

  bool defines() const { return status == DefStatus::Defines; }
};

// Defines iff the formula is satisfiable and both the minimum and the
// maximum of var over { v(formula) = 1 } equal value.
DefCheckResult def_check(const DefInstance& inst, const Budget& b = {});

// Condition D: a valuation with v(formula) = 1 and v(var) != value.
std::optional<Valuation> d_condition(const DefInstance& inst,
                                     const Budget& b = {});

// f(x, zs), f(x', zs) |- x == x', decided through the maximum of x - x'
// under both renamed copies.
bool implicit_in_logic(const FormulaPtr& f, const Variable& x,
                       const Budget& b = {});

// v(f) = a for every valuation: min and max over the whole cube equal a.
bool term_defines(const FormulaPtr& f, const Rational& a, const Budget& b = {});

// phi(x1..xn)  |->  <phi . (w <-> ~w), w, 1/2> with w fresh;
// phi is satisfiable iff the image is in DEF.
DefInstance reduce_sat_to_def(const FormulaPtr& f);

// <phi, i, a>  |->  <phi \/ psi, i, a> with psi a fresh-variable poly-mode
// defining system for a conjoined into one formula; the input satisfies
// D-bar iff the image is in DEF.
DefInstance reduce_dbar_to_def(const DefInstance& inst);

}  // namespace luk
