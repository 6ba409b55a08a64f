#include "luk/constants.hpp"

#include <algorithm>

namespace luk {

namespace {

unsigned long msb(unsigned long v) {
  unsigned long b = 0;
  while (v >>= 1) ++b;
  return b;
}

// q<m/n> <-> m*q<1/n>; in poly mode a doubling chain u_{i+1} = u_i (+) u_i
// with the target folded from the binary digits of m.
void append_multiple(Theory& out, std::vector<Variable>& aux,
                     const Variable& target, const Variable& unit,
                     unsigned long m, DefMode mode, AuxScopes& scopes) {
  if (mode == DefMode::Naive) {
    out.add(Formula::equiv(Formula::var(target),
                           Formula::multiple(m, Formula::var(unit))));
    return;
  }
  AuxPool pool = scopes.pool();
  unsigned long top = msb(m);
  std::vector<FormulaPtr> doubled{Formula::var(unit)};
  for (unsigned long i = 1; i <= top; ++i) {
    Variable u = pool.var("u" + std::to_string(i));
    aux.push_back(u);
    out.add(Formula::equiv(Formula::var(u),
                           Formula::strong_or(doubled.back(), doubled.back())));
    doubled.push_back(Formula::var(u));
  }
  FormulaPtr sum;
  for (unsigned long i = 0; i <= top; ++i) {
    if (!((m >> i) & 1)) continue;
    sum = sum ? Formula::strong_or(sum, doubled[i]) : doubled[i];
  }
  out.add(Formula::equiv(Formula::var(target), sum));
}

}  // namespace

DefiningSystem define_unit_fraction(unsigned long n, DefMode mode,
                                    AuxScopes& scopes) {
  if (n < 2) throw std::invalid_argument("unit fraction needs n >= 2");
  Variable q = Variable::q_raw(1, Integer(n));
  DefiningSystem sys{make_rational(1, static_cast<long>(n)), mode, Theory{}, q, {}};

  if (mode == DefMode::Naive) {
    FormulaPtr negated = Formula::neg(Formula::var(q));
    sys.theory.add(Formula::equiv(
        Formula::var(q), n == 2 ? negated : Formula::power(negated, n - 1)));
    return sys;
  }

  AuxPool pool = scopes.pool();
  unsigned long e = n - 1;
  unsigned long top = msb(e);
  std::vector<Variable> ys;
  for (unsigned long i = 0; i <= top; ++i) {
    Variable y = pool.var("y" + std::to_string(i));
    ys.push_back(y);
    sys.auxiliaries.push_back(y);
    FormulaPtr rhs = i == 0 ? Formula::neg(Formula::var(q))
                            : Formula::power(Formula::var(ys[i - 1]), 2);
    sys.theory.add(Formula::equiv(Formula::var(y), rhs));
  }
  FormulaPtr product;
  for (unsigned long i = 0; i <= top; ++i) {
    if (!((e >> i) & 1)) continue;
    FormulaPtr yi = Formula::var(ys[i]);
    product = product ? Formula::strong_and(product, yi) : yi;
  }
  sys.theory.add(Formula::equiv(Formula::var(q), product));
  return sys;
}

DefiningSystem define_rational(unsigned long m, unsigned long n, DefMode mode,
                               AuxScopes& scopes) {
  if (n < 1) throw std::invalid_argument("denominator must be positive");
  if (m > n) throw std::invalid_argument("m/n must lie in [0,1]");
  Variable q = Variable::q_raw(Integer(m), Integer(n));
  Rational target = make_rational(static_cast<long>(m), static_cast<long>(n));

  if (m == 0 || m == n) {
    DefiningSystem sys{target, mode, Theory{}, q, {}};
    sys.theory.add(Formula::equiv(
        Formula::var(q), m == 0 ? Formula::bottom() : Formula::top()));
    return sys;
  }

  DefiningSystem unit = define_unit_fraction(n, mode, scopes);
  if (m == 1) return unit;

  DefiningSystem sys{target, mode, std::move(unit.theory), q,
                     std::move(unit.auxiliaries)};
  append_multiple(sys.theory, sys.auxiliaries, q, unit.principal, m, mode,
                  scopes);
  return sys;
}

Theory build_tq_fin(const std::set<Rational>& constants, DefMode mode,
                    AuxScopes& scopes) {
  for (const Rational& c : constants)
    if (!(c > 0 && c < 1))
      throw std::invalid_argument("tq_fin constants must lie in (0,1)");

  Theory out;
  out.set_label("TQ-fin");
  std::map<Integer, std::vector<Rational>> by_den;
  for (const Rational& c : constants) by_den[Integer(c.get_den())].push_back(c);

  for (const auto& [den, members] : by_den) {
    unsigned long n = den.get_ui();
    DefiningSystem unit = define_unit_fraction(n, mode, scopes);
    out.extend(unit.theory);
    for (const Rational& c : members) {
      unsigned long m = Integer(c.get_num()).get_ui();
      if (m == 1) continue;  // the unit definition already covers it
      std::vector<Variable> aux;
      append_multiple(out, aux, Variable::q(c), unit.principal, m, mode, scopes);
    }
  }
  return out;
}

Theory build_tq_fin(const std::set<Rational>& constants, DefMode mode) {
  AuxScopes scopes;
  return build_tq_fin(constants, mode, scopes);
}

namespace {

FormulaPtr star_formula(const FormulaPtr& f) {
  switch (f->conn()) {
    case Conn::Constant: {
      const Rational& c = f->constant_value();
      if (c == 0 || c == 1) return f;
      return Formula::var(Variable::q(c));
    }
    case Conn::Var:
      return f;
    case Conn::Neg:
      return Formula::neg(star_formula(f->lhs()));
    case Conn::Power:
      return Formula::power(star_formula(f->lhs()), f->arity_bound());
    case Conn::Multiple:
      return Formula::multiple(f->arity_bound(), star_formula(f->lhs()));
    case Conn::StrongAnd:
      return Formula::strong_and(star_formula(f->lhs()), star_formula(f->rhs()));
    case Conn::Implies:
      return Formula::implies(star_formula(f->lhs()), star_formula(f->rhs()));
    case Conn::Min:
      return Formula::min(star_formula(f->lhs()), star_formula(f->rhs()));
    case Conn::Max:
      return Formula::max(star_formula(f->lhs()), star_formula(f->rhs()));
    case Conn::StrongOr:
      return Formula::strong_or(star_formula(f->lhs()), star_formula(f->rhs()));
    case Conn::Equiv:
      return Formula::equiv(star_formula(f->lhs()), star_formula(f->rhs()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

StarTranslation star_translate(const Theory& t, const FormulaPtr& f,
                               DefMode mode) {
  Signature sig = signature_of(t, f);
  for (const Variable& v : sig.variables)
    if (v.kind() != Variable::Kind::Plain)
      throw NameCollisionError("variable '" + v.name() +
                               "' lies in a reserved namespace");

  StarTranslation out;
  out.t_star.set_label(t.label().empty() ? "T-star" : t.label() + "-star");
  for (const FormulaPtr& ax : t.axioms()) out.t_star.add(star_formula(ax));
  out.f_star = star_formula(f);
  out.tq_fin = build_tq_fin(sig.constants, mode);
  return out;
}

Consequence decide_rpl(const Theory& t, const FormulaPtr& f, RplRoute route,
                       const Budget& b) {
  if (route == RplRoute::Direct) return decide_consequence(t, f, b);

  DefMode mode =
      route == RplRoute::TranslatedNaive ? DefMode::Naive : DefMode::Poly;
  StarTranslation st = star_translate(t, f, mode);
  Theory combined = st.t_star;
  combined.extend(st.tq_fin);
  Consequence res = decide_consequence(combined, st.f_star, b);
  if (!res.countermodel) return res;

  // Report the countermodel over the source signature only.
  Valuation restricted;
  Signature sig = signature_of(t, f);
  for (const Variable& v : sig.variables)
    if (const Rational* r = res.countermodel->find(v)) restricted.set(v, *r);
  res.countermodel = std::move(restricted);
  return res;
}

}  // namespace luk
