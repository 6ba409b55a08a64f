#include "luk/formula.hpp"

#include <algorithm>
#include <cctype>

namespace luk {

namespace {

bool is_aux_name(const std::string& name, int* scope_out) {
  // p<digits>_<rest>
  if (name.size() < 3 || name[0] != 'p') return false;
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 1 || i >= name.size() || name[i] != '_' || i + 1 >= name.size()) return false;
  if (scope_out) *scope_out = std::stoi(name.substr(1, i - 1));
  return true;
}

}  // namespace

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::islower(u) || std::isdigit(u) || c == '_';
  });
}

bool is_reserved_name(const std::string& name) {
  if (name.rfind("q<", 0) == 0) return true;
  return is_aux_name(name, nullptr);
}

Variable Variable::named(const std::string& name) {
  if (name.rfind("q<", 0) == 0)
    throw std::invalid_argument("q-variables must be built with Variable::q");
  if (!is_identifier(name))
    throw std::invalid_argument("invalid variable name: " + name);
  Kind kind = is_aux_name(name, nullptr) ? Kind::Auxiliary : Kind::Plain;
  return Variable(name, kind, std::nullopt);
}

Variable Variable::q(const Rational& value) {
  if (!in_unit_interval(value))
    throw std::invalid_argument("q-variable index outside [0,1]");
  return Variable("q<" + to_string(value) + ">", Kind::QConstant, value);
}

Variable Variable::q_raw(const Integer& num, const Integer& den) {
  if (den <= 0 || num < 0 || num > den)
    throw std::invalid_argument("q-variable index outside [0,1]");
  Rational index = make_rational(num, den);
  // Only a non-lowest-terms index keeps its verbatim surface (q<2/4>).
  if (Integer(index.get_num()) == num && Integer(index.get_den()) == den)
    return q(index);
  return Variable("q<" + num.get_str() + "/" + den.get_str() + ">",
                  Kind::QConstant, index);
}

Variable Variable::aux(int scope, const std::string& stem) {
  if (scope < 0 || !is_identifier(stem))
    throw std::invalid_argument("invalid auxiliary variable");
  return Variable("p" + std::to_string(scope) + "_" + stem, Kind::Auxiliary,
                  std::nullopt);
}

std::optional<int> Variable::aux_scope() const {
  int scope = 0;
  if (is_aux_name(name_, &scope)) return scope;
  return std::nullopt;
}

Formula::Formula(Conn conn, Rational value, std::optional<Variable> var,
                 FormulaPtr lhs, FormulaPtr rhs, unsigned long n)
    : conn_(conn),
      value_(std::move(value)),
      var_(std::move(var)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      n_(n),
      size_(1 + (lhs_ ? lhs_->size() : 0) + (rhs_ ? rhs_->size() : 0)) {}

FormulaPtr Formula::constant(const Rational& value) {
  if (!in_unit_interval(value))
    throw std::invalid_argument("constant outside [0,1]: " + to_string(value));
  return FormulaPtr(
      new Formula(Conn::Constant, value, std::nullopt, nullptr, nullptr, 0));
}

FormulaPtr Formula::top() { return constant(Rational(1)); }
FormulaPtr Formula::bottom() { return constant(Rational(0)); }

FormulaPtr Formula::var(const Variable& v) {
  return FormulaPtr(new Formula(Conn::Var, Rational(), v, nullptr, nullptr, 0));
}

FormulaPtr Formula::neg(FormulaPtr f) {
  return FormulaPtr(
      new Formula(Conn::Neg, Rational(), std::nullopt, std::move(f), nullptr, 0));
}

#define LUK_BINARY(factory, conn)                                            \
  FormulaPtr Formula::factory(FormulaPtr a, FormulaPtr b) {                  \
    return FormulaPtr(new Formula(conn, Rational(), std::nullopt,            \
                                  std::move(a), std::move(b), 0));           \
  }

LUK_BINARY(strong_and, Conn::StrongAnd)
LUK_BINARY(implies, Conn::Implies)
LUK_BINARY(min, Conn::Min)
LUK_BINARY(max, Conn::Max)
LUK_BINARY(strong_or, Conn::StrongOr)
LUK_BINARY(equiv, Conn::Equiv)
#undef LUK_BINARY

FormulaPtr Formula::power(FormulaPtr f, unsigned long n) {
  if (n == 0) throw std::invalid_argument("power with n = 0");
  return FormulaPtr(
      new Formula(Conn::Power, Rational(), std::nullopt, std::move(f), nullptr, n));
}

FormulaPtr Formula::multiple(unsigned long n, FormulaPtr f) {
  if (n == 0) throw std::invalid_argument("multiple with n = 0");
  return FormulaPtr(new Formula(Conn::Multiple, Rational(), std::nullopt,
                                std::move(f), nullptr, n));
}

bool Formula::is_binary_conn() const {
  switch (conn_) {
    case Conn::StrongAnd:
    case Conn::Implies:
    case Conn::Min:
    case Conn::Max:
    case Conn::StrongOr:
    case Conn::Equiv:
      return true;
    default:
      return false;
  }
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.conn() != b.conn() || a.size() != b.size()) return false;
  switch (a.conn()) {
    case Conn::Constant:
      return a.constant_value() == b.constant_value();
    case Conn::Var:
      return a.variable() == b.variable();
    case Conn::Neg:
      return structurally_equal(*a.lhs(), *b.lhs());
    case Conn::Power:
    case Conn::Multiple:
      return a.arity_bound() == b.arity_bound() &&
             structurally_equal(*a.lhs(), *b.lhs());
    default:
      return structurally_equal(*a.lhs(), *b.lhs()) &&
             structurally_equal(*a.rhs(), *b.rhs());
  }
}

namespace {

FormulaPtr expand(const FormulaPtr& f, ExpandMode mode) {
  switch (f->conn()) {
    case Conn::Constant:
    case Conn::Var:
      return f;
    case Conn::Neg:
      return Formula::neg(expand(f->lhs(), mode));
    case Conn::StrongAnd:
      return Formula::strong_and(expand(f->lhs(), mode), expand(f->rhs(), mode));
    case Conn::Implies:
      return Formula::implies(expand(f->lhs(), mode), expand(f->rhs(), mode));
    case Conn::Min: {
      auto a = expand(f->lhs(), mode);
      auto b = expand(f->rhs(), mode);
      if (mode == ExpandMode::SolverBasis) return Formula::min(a, b);
      // a /\ b = a . (a -> b)
      return Formula::strong_and(a, Formula::implies(a, b));
    }
    case Conn::Max: {
      auto a = expand(f->lhs(), mode);
      auto b = expand(f->rhs(), mode);
      if (mode == ExpandMode::SolverBasis) return Formula::max(a, b);
      // a \/ b = (a -> b) -> b
      return Formula::implies(Formula::implies(a, b), b);
    }
    case Conn::StrongOr: {
      // a (+) b = ~(~a . ~b)
      auto a = expand(f->lhs(), mode);
      auto b = expand(f->rhs(), mode);
      return Formula::neg(Formula::strong_and(Formula::neg(a), Formula::neg(b)));
    }
    case Conn::Equiv: {
      auto a = expand(f->lhs(), mode);
      auto b = expand(f->rhs(), mode);
      return Formula::strong_and(Formula::implies(a, b), Formula::implies(b, a));
    }
    case Conn::Power: {
      auto a = expand(f->lhs(), mode);
      FormulaPtr acc = a;
      for (unsigned long i = 1; i < f->arity_bound(); ++i)
        acc = Formula::strong_and(a, acc);
      return acc;
    }
    case Conn::Multiple: {
      // (+) is itself an abbreviation in both modes, so the n-fold chain
      // comes out directly in ~(~x . ~y) form.
      auto a = expand(f->lhs(), mode);
      FormulaPtr acc = a;
      for (unsigned long i = 1; i < f->arity_bound(); ++i)
        acc = Formula::neg(
            Formula::strong_and(Formula::neg(a), Formula::neg(acc)));
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

FormulaPtr expand_abbreviations(const FormulaPtr& f, ExpandMode mode) {
  return expand(f, mode);
}

namespace {

void collect_signature(const FormulaPtr& f, Signature& sig) {
  switch (f->conn()) {
    case Conn::Constant:
      if (f->constant_value() != 0 && f->constant_value() != 1)
        sig.constants.insert(f->constant_value());
      return;
    case Conn::Var:
      sig.variables.insert(f->variable());
      return;
    default:
      if (f->lhs()) collect_signature(f->lhs(), sig);
      if (f->rhs()) collect_signature(f->rhs(), sig);
  }
}

}  // namespace

Signature signature_of(const FormulaPtr& f) {
  Signature sig;
  collect_signature(f, sig);
  return sig;
}

Signature signature_of(const Theory& t) {
  Signature sig;
  for (const auto& ax : t.axioms()) collect_signature(ax, sig);
  return sig;
}

Signature signature_of(const Theory& t, const FormulaPtr& f) {
  Signature sig = signature_of(t);
  collect_signature(f, sig);
  return sig;
}

Integer expanded_size(const FormulaPtr& f) {
  switch (f->conn()) {
    case Conn::Constant:
    case Conn::Var:
      return 1;
    case Conn::Neg:
      return 1 + expanded_size(f->lhs());
    case Conn::StrongAnd:
    case Conn::Implies:
      return 1 + expanded_size(f->lhs()) + expanded_size(f->rhs());
    case Conn::Min:
      // a . (a -> b)
      return 2 + 2 * expanded_size(f->lhs()) + expanded_size(f->rhs());
    case Conn::Max:
      // (a -> b) -> b
      return 2 + expanded_size(f->lhs()) + 2 * expanded_size(f->rhs());
    case Conn::StrongOr:
      // ~(~a . ~b)
      return 4 + expanded_size(f->lhs()) + expanded_size(f->rhs());
    case Conn::Equiv:
      return 3 + 2 * expanded_size(f->lhs()) + 2 * expanded_size(f->rhs());
    case Conn::Power: {
      // n occurrences of the operand joined by n-1 conjunctions
      Integer e = expanded_size(f->lhs());
      Integer n(f->arity_bound());
      return n * e + (n - 1);
    }
    case Conn::Multiple: {
      // n operands folded with (+), each (+) expanding to ~(~x . ~y)
      Integer e = expanded_size(f->lhs());
      Integer n(f->arity_bound());
      return n * e + 4 * (n - 1);
    }
  }
  throw std::logic_error("unreachable");
}

FormulaPtr substitute(const FormulaPtr& f,
                      const std::vector<std::pair<Variable, FormulaPtr>>& map) {
  switch (f->conn()) {
    case Conn::Constant:
      return f;
    case Conn::Var:
      for (const auto& [v, repl] : map)
        if (v == f->variable()) return repl;
      return f;
    case Conn::Neg:
      return Formula::neg(substitute(f->lhs(), map));
    case Conn::Power:
      return Formula::power(substitute(f->lhs(), map), f->arity_bound());
    case Conn::Multiple:
      return Formula::multiple(f->arity_bound(), substitute(f->lhs(), map));
    case Conn::StrongAnd:
      return Formula::strong_and(substitute(f->lhs(), map), substitute(f->rhs(), map));
    case Conn::Implies:
      return Formula::implies(substitute(f->lhs(), map), substitute(f->rhs(), map));
    case Conn::Min:
      return Formula::min(substitute(f->lhs(), map), substitute(f->rhs(), map));
    case Conn::Max:
      return Formula::max(substitute(f->lhs(), map), substitute(f->rhs(), map));
    case Conn::StrongOr:
      return Formula::strong_or(substitute(f->lhs(), map), substitute(f->rhs(), map));
    case Conn::Equiv:
      return Formula::equiv(substitute(f->lhs(), map), substitute(f->rhs(), map));
  }
  throw std::logic_error("unreachable");
}

int scope_above(const FormulaPtr& f) {
  int top = 0;
  Signature sig = signature_of(f);
  for (const auto& v : sig.variables)
    if (auto s = v.aux_scope(); s && *s >= top) top = *s + 1;
  return top;
}

}  // namespace luk
