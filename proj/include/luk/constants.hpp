#pragma once

#include "luk/solver.hpp"

namespace luk {

enum class DefMode {
  Naive,  // q <-> (~q)^(n-1), the power kept as one AST node
  Poly,   // squaring/doubling systems, size polynomial in bit-length(n)
};

// A theory whose standard models all give `principal` the value `target`.
struct DefiningSystem {
  Rational target;
  DefMode mode;
  Theory theory;
  Variable principal;
  std::vector<Variable> auxiliaries;
};

// q<1/n> <-> (~q<1/n>)^(n-1), or its repeated-squaring unfolding
//   y0 = ~x, y_{i+1} = y_i^2, x = product of y_i over the binary digits
// of n-1.
DefiningSystem define_unit_fraction(unsigned long n, DefMode mode,
                                    AuxScopes& scopes);

// m = 0 and m = n pin to the constants; otherwise the unit-fraction
// system plus q<m/n> <-> m*q<1/n> (doubling chain in poly mode).
// The index m/n is kept verbatim, so define_rational(2, 4, ...) defines
// the variable named q<2/4>.
DefiningSystem define_rational(unsigned long m, unsigned long n, DefMode mode,
                               AuxScopes& scopes);

// Union of defining systems for every constant, one unit-fraction
// definition per denominator, all auxiliary pools disjoint.
Theory build_tq_fin(const std::set<Rational>& constants, DefMode mode,
                    AuxScopes& scopes);
Theory build_tq_fin(const std::set<Rational>& constants, DefMode mode);

class NameCollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StarTranslation {
  Theory t_star;
  FormulaPtr f_star;
  Theory tq_fin;  // defines exactly the constants occurring in (T, f)
};

// Constants in (0,1) become their q-variables; 0, 1 and plain variables
// stay put. Inputs mentioning reserved (q/auxiliary) names are rejected.
StarTranslation star_translate(const Theory& t, const FormulaPtr& f,
                               DefMode mode);

enum class RplRoute { Direct, TranslatedNaive, TranslatedPoly };

// T |- f in RPL, decided either directly over the constants or through
// the star translation into L. All routes agree.
Consequence decide_rpl(const Theory& t, const FormulaPtr& f, RplRoute route,
                       const Budget& b = {});

}  // namespace luk
