#include "luk/irrational.hpp"

namespace luk {

namespace {

// p+1 bisection steps of [0,1], so the width 2^-(p+1) clears the 2^-p
// bound strictly.
RealOracle bisection_oracle(std::string name,
                            std::function<bool(const Rational&)> below) {
  auto fn = [below](unsigned p) {
    Rational lo(0), hi(1);
    for (unsigned step = 0; step <= p; ++step) {
      Rational mid = (lo + hi) / 2;
      (below(mid) ? lo : hi) = mid;
    }
    return std::make_pair(lo, hi);
  };
  return {std::move(name), std::move(fn)};
}

Rational pow2_neg(unsigned p) {
  return make_rational(Integer(1), Integer(1) << p);
}

void check_bracket(const RealOracle& o, unsigned p, const Rational& lo,
                   const Rational& hi) {
  if (!(lo < hi) || lo < 0 || hi > 1 || hi - lo > pow2_neg(p))
    throw std::invalid_argument("oracle '" + o.name +
                                "' returned an invalid bracket at p = " +
                                std::to_string(p));
}

CutFragment fragment_with_scopes(const RealOracle& o, unsigned p,
                                 AuxScopes& scopes) {
  if (p < 1) throw std::invalid_argument("cut fragments need p >= 1");
  if (!is_identifier(o.name) || is_reserved_name(o.name))
    throw std::invalid_argument("oracle name must be a plain identifier");
  auto [lo, hi] = o.bracket(p);
  check_bracket(o, p, lo, hi);

  std::set<Rational> endpoints;
  if (lo > 0 && lo < 1) endpoints.insert(lo);
  if (hi > 0 && hi < 1) endpoints.insert(hi);
  CutFragment frag{o.name, p, build_tq_fin(endpoints, DefMode::Poly, scopes),
                   Variable::named("i_" + o.name), lo, hi};
  frag.theory.set_label("cut-" + o.name);

  auto endpoint = [&](const Rational& r) -> FormulaPtr {
    if (r == 0 || r == 1) return Formula::constant(r);
    return Formula::var(Variable::q(r));
  };
  FormulaPtr ia = Formula::var(frag.cut_variable);
  frag.theory.add(Formula::implies(endpoint(lo), ia));
  frag.theory.add(Formula::implies(ia, endpoint(hi)));
  return frag;
}

}  // namespace

RealOracle sqrt2_over_2() {
  // mid < sqrt(2)/2  iff  mid^2 < 1/2
  return bisection_oracle("sqrt2over2", [](const Rational& mid) {
    return mid * mid < Rational(1, 2);
  });
}

RealOracle sqrt2_minus_1() {
  // mid < sqrt(2)-1  iff  (mid+1)^2 < 2
  return bisection_oracle("sqrt2minus1", [](const Rational& mid) {
    Rational shifted = mid + 1;
    return shifted * shifted < 2;
  });
}

RealOracle oracle_from_table(
    const std::string& name,
    const std::vector<std::tuple<unsigned, Rational, Rational>>& rows) {
  if (!is_identifier(name) || is_reserved_name(name))
    throw std::invalid_argument("oracle name must be a plain identifier");
  auto table = std::make_shared<std::map<unsigned, std::pair<Rational, Rational>>>();
  for (const auto& [p, lo, hi] : rows) {
    if (!(lo < hi) || lo < 0 || hi > 1 || hi - lo > pow2_neg(p))
      throw std::invalid_argument("invalid bracket row at p = " +
                                  std::to_string(p));
    if (!table->emplace(p, std::make_pair(lo, hi)).second)
      throw std::invalid_argument("duplicate precision in bracket table");
  }
  // Nesting across the listed precisions.
  const std::pair<Rational, Rational>* prev = nullptr;
  for (const auto& [p, br] : *table) {
    if (prev && (br.first < prev->first || br.second > prev->second))
      throw std::invalid_argument("bracket table is not nested");
    prev = &br;
  }
  auto fn = [name, table](unsigned p) {
    auto it = table->find(p);
    if (it == table->end())
      throw std::invalid_argument("oracle '" + name +
                                  "' has no bracket for p = " +
                                  std::to_string(p));
    return it->second;
  };
  return {name, std::move(fn)};
}

CutFragment cut_fragment(const RealOracle& o, unsigned p) {
  AuxScopes scopes;
  return fragment_with_scopes(o, p, scopes);
}

std::pair<Rational, Rational> confinement(const CutFragment& frag,
                                          const Budget& b) {
  Encoded e = encode(frag.theory, Formula::var(frag.cut_variable));
  OptimizationOutcome low = optimize(e.problem, b);
  if (!low.optimal())
    throw std::logic_error("cut fragments always have the canonical model");
  e.problem.set_objective(e.problem.objective(), Direction::Maximize);
  OptimizationOutcome high = optimize(e.problem, b);
  return {low.value, high.value};
}

Rational product_pair_check(const RealOracle& oa, const RealOracle& ob,
                            unsigned p, const Budget& b) {
  if (p < 1) throw std::invalid_argument("product check needs p >= 1");
  if (oa.name == ob.name)
    throw std::invalid_argument("product check needs two distinct oracles");

  // a.a = b must be consistent with the brackets at every precision:
  // the Lukasiewicz square of [lo_a, hi_a] has to meet [lo_b, hi_b].
  for (unsigned j = 1; j <= p; ++j) {
    auto [la, ha] = oa.bracket(j);
    auto [lb, hb] = ob.bracket(j);
    check_bracket(oa, j, la, ha);
    check_bracket(ob, j, lb, hb);
    Rational sq_lo = std::max(Rational(0), Rational(2 * la - 1));
    Rational sq_hi = std::max(Rational(0), Rational(2 * ha - 1));
    if (sq_hi < lb || hb < sq_lo)
      throw std::invalid_argument(
          "oracle pair is incompatible with a.a = b at p = " +
          std::to_string(j));
  }

  AuxScopes scopes;
  CutFragment fa = fragment_with_scopes(oa, p, scopes);
  CutFragment fb = fragment_with_scopes(ob, p, scopes);
  Theory both = fa.theory;
  both.extend(fb.theory);

  FormulaPtr ia = Formula::var(fa.cut_variable);
  FormulaPtr ib = Formula::var(fb.cut_variable);
  return truth_degree(both, Formula::equiv(Formula::strong_and(ia, ia), ib), b);
}

}  // namespace luk
