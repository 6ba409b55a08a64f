#include "luk/solver.hpp"

namespace luk {

namespace {

void check_witness(const Theory& t, const FormulaPtr& f, const Valuation& v,
                   const Rational& expected) {
  if (!satisfies(t, v))
    throw std::logic_error("witness fails a theory axiom");
  if (evaluate(f, v) != expected)
    throw std::logic_error("witness does not reproduce the optimum");
}

}  // namespace

std::optional<Valuation> satisfiable(const FormulaPtr& f, const Budget& b) {
  Encoded e = encode(Theory{}, f);
  e.problem.set_objective(e.problem.objective(), Direction::Maximize);
  OptimizationOutcome out = optimize(e.problem, b);
  if (!out.optimal())
    throw std::logic_error("the unit box is never infeasible");
  if (out.value != 1) return std::nullopt;
  check_witness(Theory{}, f, out.witness, Rational(1));
  return out.witness;
}

Consequence decide_consequence(const Theory& t, const FormulaPtr& f,
                               const Budget& b) {
  Encoded e = encode(t, f);
  OptimizationOutcome out = optimize(e.problem, b);
  if (!out.optimal()) return {true, std::nullopt, std::nullopt};
  if (out.value == 1) return {true, std::nullopt, std::nullopt};
  check_witness(t, f, out.witness, out.value);
  return {false, out.witness, out.value};
}

Rational truth_degree(const Theory& t, const FormulaPtr& f, const Budget& b) {
  Encoded e = encode(t, f);
  OptimizationOutcome out = optimize(e.problem, b);
  // inf over the empty model class is 1.
  if (!out.optimal()) return Rational(1);
  check_witness(t, f, out.witness, out.value);
  return out.value;
}

}  // namespace luk
