#include "luk/semantics.hpp"

#include <algorithm>

#include "luk/parse.hpp"

namespace luk {

Valuation::Valuation(
    std::initializer_list<std::pair<const Variable, Rational>> init) {
  for (const auto& [v, r] : init) set(v, r);
}

void Valuation::set(const Variable& v, const Rational& value) {
  if (!in_unit_interval(value))
    throw EvalError("valuation value outside [0,1] for " + v.name());
  map_.insert_or_assign(v, value);
}

const Rational* Valuation::find(const Variable& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

namespace {

Rational clamp_low(Rational r) { return r < 0 ? Rational(0) : r; }
Rational clamp_high(Rational r) { return r > 1 ? Rational(1) : r; }

}  // namespace

Rational evaluate(const FormulaPtr& f, const Valuation& v) {
  switch (f->conn()) {
    case Conn::Constant:
      return f->constant_value();
    case Conn::Var: {
      const Rational* r = v.find(f->variable());
      if (!r) throw EvalError("unbound variable: " + f->variable().name());
      return *r;
    }
    case Conn::Neg:
      return 1 - evaluate(f->lhs(), v);
    case Conn::StrongAnd:
      return clamp_low(evaluate(f->lhs(), v) + evaluate(f->rhs(), v) - 1);
    case Conn::Implies:
      return clamp_high(1 - evaluate(f->lhs(), v) + evaluate(f->rhs(), v));
    case Conn::Min:
      return std::min(evaluate(f->lhs(), v), evaluate(f->rhs(), v));
    case Conn::Max:
      return std::max(evaluate(f->lhs(), v), evaluate(f->rhs(), v));
    case Conn::StrongOr:
      return clamp_high(evaluate(f->lhs(), v) + evaluate(f->rhs(), v));
    case Conn::Equiv: {
      Rational d = evaluate(f->lhs(), v) - evaluate(f->rhs(), v);
      return d < 0 ? Rational(1 + d) : Rational(1 - d);
    }
    case Conn::Power: {
      Rational n(f->arity_bound());
      return clamp_low(n * evaluate(f->lhs(), v) - (n - 1));
    }
    case Conn::Multiple: {
      Rational n(f->arity_bound());
      return clamp_high(n * evaluate(f->lhs(), v));
    }
  }
  throw std::logic_error("unreachable");
}

bool satisfies(const Theory& t, const Valuation& v) {
  return std::all_of(t.axioms().begin(), t.axioms().end(),
                     [&](const FormulaPtr& ax) { return evaluate(ax, v) == 1; });
}

namespace {

bool in_chain(const Rational& r, unsigned long k) {
  return in_unit_interval(r) && Integer(r.get_den()) <= Integer(k) &&
         mpz_divisible_p(Integer(k).get_mpz_t(), r.get_den().get_mpz_t());
}

}  // namespace

Rational evaluate_on_chain(const FormulaPtr& f, const ChainSpec& spec,
                           const Valuation& v) {
  if (spec.k < 1) throw EvalError("chain requires k >= 1");
  for (const auto& [var, value] : v.assignment())
    if (!in_chain(value, spec.k))
      throw EvalError("valuation value " + to_string(value) +
                      " is not in the chain with k = " + std::to_string(spec.k));
  return evaluate(f, v);
}

std::vector<Rational> chain_unit_solutions(unsigned long n,
                                           const ChainSpec& spec) {
  if (n < 2) throw std::invalid_argument("chain_unit_solutions requires n >= 2");
  if (spec.k < 1) throw std::invalid_argument("chain requires k >= 1");
  std::vector<Rational> out;
  Rational exp(n - 1);
  for (unsigned long i = 0; i <= spec.k; ++i) {
    Rational e = make_rational(Integer(i), Integer(spec.k));
    // (~e)^(n-1) by the closed form
    Rational rhs = clamp_low(exp * (1 - e) - (exp - 1));
    if (e == rhs) out.push_back(e);
  }
  return out;
}

BookkeepingClosureError::BookkeepingClosureError(std::vector<Rational> missing)
    : std::runtime_error([&missing] {
        std::string msg = "constant set not closed; missing:";
        for (const auto& r : missing) msg += " " + to_string(r);
        return msg;
      }()),
      missing_(std::move(missing)) {}

BookkeepingResult generate_bookkeeping(const std::set<Rational>& constants,
                                       const std::vector<BookConn>& connectives,
                                       NegForm neg_form) {
  for (const auto& r : constants)
    if (!in_unit_interval(r))
      throw std::invalid_argument("bookkeeping constant outside [0,1]");

  std::set<Rational> missing;
  BookkeepingResult out;
  out.theory.set_label("bookkeeping");

  auto qvar = [](const Rational& r) { return Formula::var(Variable::q(r)); };
  auto require = [&](const Rational& t) {
    bool ok = constants.count(t) > 0;
    if (!ok) missing.insert(t);
    return ok;
  };

  for (BookConn conn : connectives) {
    if (conn == BookConn::Neg) {
      for (const auto& r : constants) {
        Rational t = 1 - r;
        if (neg_form == NegForm::ImpliesZero && !require(Rational(0))) continue;
        if (!require(t)) continue;
        FormulaPtr lhs = neg_form == NegForm::Equiv
                             ? Formula::neg(qvar(r))
                             : Formula::implies(qvar(r), qvar(Rational(0)));
        out.theory.add(Formula::equiv(lhs, qvar(t)));
      }
      continue;
    }
    for (const auto& r : constants) {
      for (const auto& s : constants) {
        Rational t;
        FormulaPtr lhs;
        switch (conn) {
          case BookConn::StrongAnd:
            t = std::max(Rational(0), Rational(r + s - 1));
            lhs = Formula::strong_and(qvar(r), qvar(s));
            break;
          case BookConn::Implies:
            t = std::min(Rational(1), Rational(1 - r + s));
            lhs = Formula::implies(qvar(r), qvar(s));
            break;
          case BookConn::StrongOr:
            t = std::min(Rational(1), Rational(r + s));
            lhs = Formula::strong_or(qvar(r), qvar(s));
            break;
          case BookConn::Neg:
            continue;
        }
        if (!require(t)) continue;
        out.theory.add(Formula::equiv(lhs, qvar(t)));
      }
    }
  }

  out.missing.assign(missing.begin(), missing.end());
  return out;
}

Theory require_closed(BookkeepingResult result) {
  if (!result.closed()) throw BookkeepingClosureError(std::move(result.missing));
  return std::move(result.theory);
}

}  // namespace luk
