#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "doctest.h"
#include "luk/parse.hpp"
#include "luk/semantics.hpp"

inline luk::FormulaPtr P(const std::string& s) { return luk::parse_formula(s); }

inline luk::Rational R(const std::string& s) {
  auto r = luk::parse_rational(s);
  REQUIRE_MESSAGE(r.has_value(), "bad rational literal: ", s);
  return *r;
}

inline luk::Variable V(const std::string& name) {
  if (name.rfind("q<", 0) == 0) return P(name)->variable();
  return luk::Variable::named(name);
}

inline luk::Valuation
val(std::initializer_list<std::pair<std::string, std::string>> entries) {
  luk::Valuation v;
  for (const auto& [name, value] : entries) v.set(V(name), R(value));
  return v;
}

inline std::vector<std::string> render_all(const luk::Theory& t) {
  std::vector<std::string> out;
  for (const auto& ax : t.axioms()) out.push_back(luk::render_formula(ax));
  return out;
}

// Exhaustive minimum of f over the chain grid {0, 1/k, ..., 1}^vars,
// restricted to grid models of t; independent of the MILP path.
inline std::optional<luk::Rational> grid_min(const luk::Theory& t,
                                             const luk::FormulaPtr& f,
                                             unsigned long k) {
  using namespace luk;
  Signature sig = signature_of(t, f);
  std::vector<Variable> vars(sig.variables.begin(), sig.variables.end());
  std::vector<unsigned long> idx(vars.size(), 0);
  std::optional<Rational> best;
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i)
      v.set(vars[i], make_rational(static_cast<long>(idx[i]), static_cast<long>(k)));
    if (satisfies(t, v)) {
      Rational value = evaluate(f, v);
      if (!best || value < *best) best = value;
    }
    std::size_t carry = 0;
    while (carry < idx.size() && ++idx[carry] > k) idx[carry++] = 0;
    if (carry == idx.size()) return best;
  }
}

// Deterministic generator (splitmix64); std::uniform_int_distribution is
// implementation-defined, so tests roll their own mapping.
class TestRng {
 public:
  explicit TestRng(unsigned long long seed) : s_(seed + 0x9e3779b97f4a7c15ull) {}

  unsigned long long next() {
    unsigned long long z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
  bool chance(int num, int den) { return below(den) < num; }

 private:
  unsigned long long s_;
};

inline luk::Rational random_unit_rational(TestRng& rng, int max_den) {
  int den = 1 + rng.below(max_den);
  int num = rng.below(den + 1);
  return luk::make_rational(num, den);
}

// Random formula over at most `num_vars` variables x, y, z; constants
// (when allowed) have denominators <= max_den.
inline luk::FormulaPtr random_formula(TestRng& rng, int budget, int num_vars,
                                      int max_den, bool allow_constants) {
  using luk::Formula;
  static const char* names[] = {"x", "y", "z"};
  if (budget <= 1) {
    if (allow_constants && rng.chance(1, 4))
      return Formula::constant(random_unit_rational(rng, max_den));
    return Formula::var(V(names[rng.below(num_vars)]));
  }
  int pick = rng.below(10);
  if (pick == 0) return Formula::neg(random_formula(rng, budget - 1, num_vars, max_den, allow_constants));
  if (pick == 1) {
    unsigned long n = 2 + rng.below(3);
    return Formula::power(random_formula(rng, budget - 1, num_vars, max_den, allow_constants), n);
  }
  if (pick == 2) {
    unsigned long n = 2 + rng.below(3);
    return Formula::multiple(n, random_formula(rng, budget - 1, num_vars, max_den, allow_constants));
  }
  int left = 1 + rng.below(budget - 1);
  auto a = random_formula(rng, left, num_vars, max_den, allow_constants);
  auto b = random_formula(rng, budget - 1 - left, num_vars, max_den, allow_constants);
  switch (pick % 7) {
    case 0: return Formula::strong_and(a, b);
    case 1: return Formula::implies(a, b);
    case 2: return Formula::min(a, b);
    case 3: return Formula::max(a, b);
    case 4: return Formula::strong_or(a, b);
    case 5: return Formula::equiv(a, b);
    default: return Formula::implies(a, b);
  }
}

inline luk::Valuation random_valuation(TestRng& rng, const luk::FormulaPtr& f,
                                       int max_den) {
  luk::Valuation v;
  for (const auto& var : luk::signature_of(f).variables)
    v.set(var, random_unit_rational(rng, max_den));
  return v;
}
