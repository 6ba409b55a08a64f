#include "luk/definability.hpp"

namespace luk {

namespace {

void check_instance(const DefInstance& inst) {
  if (!in_unit_interval(inst.value))
    throw std::invalid_argument("target value outside [0,1]");
  if (!signature_of(inst.formula).variables.count(inst.var))
    throw std::invalid_argument("distinguished variable does not occur: " +
                                inst.var.name());
}

struct Range {
  bool feasible = false;
  Rational min_value, max_value;
  Valuation at_min, at_max;
};

// Minimum and maximum of `x` over { v(formula) = 1 }.
Range range_when_true(const FormulaPtr& formula, const Variable& x,
                      const Budget& b) {
  Theory t;
  t.add(formula);
  Encoded e = encode(t, Formula::var(x));

  OptimizationOutcome low = optimize(e.problem, b);
  if (!low.optimal()) return {};
  e.problem.set_objective(e.problem.objective(), Direction::Maximize);
  OptimizationOutcome high = optimize(e.problem, b);
  if (!high.optimal()) throw std::logic_error("feasibility cannot flip");

  Range r{true, low.value, high.value, low.witness, high.witness};
  if (evaluate(formula, r.at_min) != 1 || evaluate(formula, r.at_max) != 1)
    throw std::logic_error("optimum witness fails the formula");
  return r;
}

Variable fresh_plain(const Signature& sig, const std::string& stem) {
  for (int i = 1;; ++i) {
    std::string name = i == 1 ? stem : stem + std::to_string(i);
    Variable v = Variable::named(name);
    if (!sig.variables.count(v)) return v;
  }
}

}  // namespace

DefCheckResult def_check(const DefInstance& inst, const Budget& b) {
  check_instance(inst);
  Range r = range_when_true(inst.formula, inst.var, b);
  if (!r.feasible) return {DefStatus::Unsatisfiable, std::nullopt};
  if (r.min_value == inst.value && r.max_value == inst.value)
    return {DefStatus::Defines, std::nullopt};
  return {DefStatus::Leaks,
          r.min_value != inst.value ? r.at_min : r.at_max};
}

std::optional<Valuation> d_condition(const DefInstance& inst, const Budget& b) {
  check_instance(inst);
  Range r = range_when_true(inst.formula, inst.var, b);
  if (!r.feasible) return std::nullopt;
  if (r.max_value > inst.value) return r.at_max;
  if (r.min_value < inst.value) return r.at_min;
  return std::nullopt;
}

bool implicit_in_logic(const FormulaPtr& f, const Variable& x, const Budget& b) {
  Signature sig = signature_of(f);
  if (!sig.variables.count(x))
    throw std::invalid_argument("variable does not occur: " + x.name());

  Variable primed = fresh_plain(sig, x.name() + "_p");
  FormulaPtr copy = substitute(f, {{x, Formula::var(primed)}});
  Theory t;
  t.add(f);
  t.add(copy);

  Encoded e = encode(t, Formula::var(x));
  LinearExpr gap;
  gap.coeffs[e.problem.formula_vars().at(x)] = 1;
  gap.coeffs[e.problem.formula_vars().at(primed)] = -1;
  e.problem.set_objective(std::move(gap), Direction::Maximize);

  OptimizationOutcome out = optimize(e.problem, b);
  if (!out.optimal()) return true;  // unsatisfiable: entailment is vacuous
  if (out.value < 0) throw std::logic_error("renaming symmetry violated");
  if (out.value == 0) return true;
  if (!satisfies(t, out.witness))
    throw std::logic_error("separation witness fails the theory");
  return false;
}

bool term_defines(const FormulaPtr& f, const Rational& a, const Budget& b) {
  if (!in_unit_interval(a))
    throw std::invalid_argument("target value outside [0,1]");
  Encoded e = encode(Theory{}, f);
  OptimizationOutcome low = optimize(e.problem, b);
  if (!low.optimal()) throw std::logic_error("the unit box is never infeasible");
  if (low.value != a) return false;
  e.problem.set_objective(e.problem.objective(), Direction::Maximize);
  OptimizationOutcome high = optimize(e.problem, b);
  return high.value == a;
}

DefInstance reduce_sat_to_def(const FormulaPtr& f) {
  Variable w = fresh_plain(signature_of(f), "w");
  FormulaPtr fixer = Formula::equiv(Formula::var(w), Formula::neg(Formula::var(w)));
  return {Formula::strong_and(f, fixer), w, Rational(1, 2)};
}

DefInstance reduce_dbar_to_def(const DefInstance& inst) {
  check_instance(inst);

  AuxScopes scopes(scope_above(inst.formula));
  unsigned long m = Integer(inst.value.get_num()).get_ui();
  unsigned long n = Integer(inst.value.get_den()).get_ui();
  DefiningSystem sys = define_rational(m, n, DefMode::Poly, scopes);

  // Rename the system onto the instance: the principal becomes the
  // distinguished variable and any unit q-variable becomes a fresh
  // auxiliary, so psi(x_i, zs) shares nothing else with phi.
  std::vector<std::pair<Variable, FormulaPtr>> renames{
      {sys.principal, Formula::var(inst.var)}};
  for (const Variable& v : signature_of(sys.theory).variables)
    if (v.kind() == Variable::Kind::QConstant && v != sys.principal)
      renames.emplace_back(v, Formula::var(scopes.pool().var("q")));

  FormulaPtr psi;
  for (const FormulaPtr& ax : sys.theory.axioms()) {
    FormulaPtr renamed = substitute(ax, renames);
    psi = psi ? Formula::strong_and(psi, renamed) : renamed;
  }
  return {Formula::max(inst.formula, psi), inst.var, inst.value};
}

}  // namespace luk
