#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <vector>

#include "luk/formula.hpp"

namespace luk {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite assignment of rationals in [0,1] to variables.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const Variable, Rational>> init);

  void set(const Variable& v, const Rational& value);
  const Rational* find(const Variable& v) const;
  const std::map<Variable, Rational>& assignment() const { return map_; }
  bool empty() const { return map_.empty(); }

 private:
  std::map<Variable, Rational> map_;
};

// Exact value of f under v over the standard algebra. Powers and
// multiples use the closed forms max(0, nx-(n-1)) and min(1, nx).
Rational evaluate(const FormulaPtr& f, const Valuation& v);

// Does every axiom evaluate to 1?
bool satisfies(const Theory& t, const Valuation& v);

// The chain L_{k+1} with domain {0, 1/k, ..., 1}.
struct ChainSpec {
  unsigned long k;
};

// Same value as evaluate; additionally checks v maps into the chain.
Rational evaluate_on_chain(const FormulaPtr& f, const ChainSpec& spec,
                           const Valuation& v);

// All chain elements e with e = (~e)^(n-1); [1/n] when n divides k,
// empty otherwise.
std::vector<Rational> chain_unit_solutions(unsigned long n, const ChainSpec& spec);

enum class BookConn { StrongAnd, Implies, StrongOr, Neg };

enum class NegForm {
  Equiv,        // ~q<r> <-> q<1-r>
  ImpliesZero,  // (q<r> -> q<0>) <-> q<1-r>
};

// The constant set is not closed under the requested connectives; lists
// every result value that is missing.
class BookkeepingClosureError : public std::runtime_error {
 public:
  explicit BookkeepingClosureError(std::vector<Rational> missing);
  const std::vector<Rational>& missing() const { return missing_; }

 private:
  std::vector<Rational> missing_;
};

struct BookkeepingResult {
  Theory theory;
  // Result values with no constant in the set, ascending. Such instances
  // are omitted from the theory but never silently: callers that need a
  // closed set go through require_closed.
  std::vector<Rational> missing;

  bool closed() const { return missing.empty(); }
};

// One formula q<r> o q<s> <-> q<t> per ordered pair of constants and
// connective, plus the unary instances for negation.
BookkeepingResult generate_bookkeeping(const std::set<Rational>& constants,
                                       const std::vector<BookConn>& connectives,
                                       NegForm neg_form = NegForm::Equiv);

// The theory when the set was closed; BookkeepingClosureError otherwise.
Theory require_closed(BookkeepingResult result);

}  // namespace luk
