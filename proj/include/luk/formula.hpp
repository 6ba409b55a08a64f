#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "luk/rational.hpp"

namespace luk {

// Propositional variable. Three namespaces share one identifier space:
//   plain      user variables, [a-z][a-z0-9_]*
//   q-constant q<M/N>, stands for the rational M/N under the canonical model
//   auxiliary  p<scope>_<stem>, generated members of a fresh pool
// Identity is the surface name; the q-index is derived from it. q<2/4> and
// q<1/2> are distinct variables that happen to share the index 1/2.
class Variable {
 public:
  enum class Kind { Plain, QConstant, Auxiliary };

  // Any identifier as written; classifies auxiliary names by their pattern.
  static Variable named(const std::string& name);
  // q-variable with the canonical (lowest-terms) surface for `value`.
  static Variable q(const Rational& value);
  // q-variable keeping the index exactly as given, e.g. q<0/7>.
  static Variable q_raw(const Integer& num, const Integer& den);
  static Variable aux(int scope, const std::string& stem);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  // Set exactly for q-constants.
  const std::optional<Rational>& q_index() const { return q_index_; }
  std::optional<int> aux_scope() const;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.name_ == b.name_;
  }
  friend bool operator!=(const Variable& a, const Variable& b) {
    return !(a == b);
  }
  friend bool operator<(const Variable& a, const Variable& b) {
    return a.name_ < b.name_;
  }

 private:
  Variable(std::string name, Kind kind, std::optional<Rational> q_index)
      : name_(std::move(name)), kind_(kind), q_index_(std::move(q_index)) {}

  std::string name_;
  Kind kind_;
  std::optional<Rational> q_index_;
};

// Does `name` fall in a generated namespace (q<...> or p<k>_...)?
bool is_reserved_name(const std::string& name);
// Valid plain/auxiliary identifier: [a-z][a-z0-9_]*.
bool is_identifier(const std::string& name);

enum class Conn {
  Constant,
  Var,
  Neg,
  StrongAnd,  // x . y = max(0, x+y-1)
  Implies,    // x -> y = min(1, 1-x+y)
  Min,
  Max,
  StrongOr,   // x (+) y = min(1, x+y)
  Equiv,      // 1 - |x-y|
  Power,      // f^n, n-fold strong conjunction
  Multiple,   // n*f, n-fold strong disjunction
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST node. Subtrees are shared freely; all operations treat
// formulas as values.
class Formula {
 public:
  static FormulaPtr constant(const Rational& value);
  static FormulaPtr top();     // constant 1
  static FormulaPtr bottom();  // constant 0
  static FormulaPtr var(const Variable& v);
  static FormulaPtr neg(FormulaPtr f);
  static FormulaPtr strong_and(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr min(FormulaPtr a, FormulaPtr b);
  static FormulaPtr max(FormulaPtr a, FormulaPtr b);
  static FormulaPtr strong_or(FormulaPtr a, FormulaPtr b);
  static FormulaPtr equiv(FormulaPtr a, FormulaPtr b);
  static FormulaPtr power(FormulaPtr f, unsigned long n);
  static FormulaPtr multiple(unsigned long n, FormulaPtr f);

  Conn conn() const { return conn_; }
  const Rational& constant_value() const { return value_; }
  const Variable& variable() const { return *var_; }
  // First operand; the only operand of neg/power/multiple.
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  unsigned long arity_bound() const { return n_; }  // n of power/multiple

  bool is_leaf() const { return conn_ == Conn::Constant || conn_ == Conn::Var; }
  bool is_binary_conn() const;
  std::size_t size() const { return size_; }  // AST node count

 private:
  Formula(Conn conn, Rational value, std::optional<Variable> var,
          FormulaPtr lhs, FormulaPtr rhs, unsigned long n);

  Conn conn_;
  Rational value_;
  std::optional<Variable> var_;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  unsigned long n_;
  std::size_t size_;
};

bool structurally_equal(const Formula& a, const Formula& b);
inline bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return structurally_equal(*a, *b);
}

// Finite ordered list of axioms. Order is insertion order and duplicates
// are kept; everything downstream iterates it deterministically.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::vector<FormulaPtr> axioms, std::string label = {})
      : axioms_(std::move(axioms)), label_(std::move(label)) {}

  void add(FormulaPtr f) { axioms_.push_back(std::move(f)); }
  void extend(const Theory& other) {
    axioms_.insert(axioms_.end(), other.axioms_.begin(), other.axioms_.end());
  }

  const std::vector<FormulaPtr>& axioms() const { return axioms_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }

 private:
  std::vector<FormulaPtr> axioms_;
  std::string label_;
};

enum class ExpandMode {
  SolverBasis,  // expand power/multiple/equiv/strong-or, keep min/max
  Full,         // everything down to {., ->, ~, constants, variables}
};

FormulaPtr expand_abbreviations(const FormulaPtr& f, ExpandMode mode);

struct Signature {
  std::set<Variable> variables;
  std::set<Rational> constants;  // constants other than 0 and 1
};

Signature signature_of(const FormulaPtr& f);
Signature signature_of(const Theory& t);
Signature signature_of(const Theory& t, const FormulaPtr& f);

// An L-formula mentions no constants besides 0 and 1.
inline bool is_l_formula(const FormulaPtr& f) {
  return signature_of(f).constants.empty();
}

// Node count of the Full expansion, computed by recurrence instead of
// materializing the (possibly exponential) tree.
Integer expanded_size(const FormulaPtr& f);

// Substitute variables by formulas (simultaneous).
FormulaPtr substitute(const FormulaPtr& f,
                      const std::vector<std::pair<Variable, FormulaPtr>>& map);

// A fresh pool of auxiliary variables sharing one scope tag.
class AuxPool {
 public:
  explicit AuxPool(int scope) : scope_(scope) {}
  Variable var(const std::string& stem) const { return Variable::aux(scope_, stem); }
  int scope() const { return scope_; }

 private:
  int scope_;
};

// Hands out scope ids so independent generators never share a pool.
class AuxScopes {
 public:
  explicit AuxScopes(int first = 0) : next_(first) {}
  AuxPool pool() { return AuxPool(next_++); }
  int peek() const { return next_; }

 private:
  int next_;
};

// Smallest scope id strictly above every p<k>_ name in the formula.
int scope_above(const FormulaPtr& f);

}  // namespace luk
