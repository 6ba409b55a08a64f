#pragma once

#include <functional>

#include "luk/constants.hpp"

namespace luk {

// A computable irrational in (0,1), sampled through nested rational
// brackets: lo < a < hi with hi - lo <= 2^-p.
struct RealOracle {
  std::string name;
  std::function<std::pair<Rational, Rational>(unsigned)> bracket;
};

// sqrt(2)/2, by exact integer bisection of x^2 against 1/2.
RealOracle sqrt2_over_2();
// sqrt(2)-1 = (sqrt(2)/2)^2 under the Lukasiewicz product.
RealOracle sqrt2_minus_1();

// Bracket table: one entry per precision. Only listed precisions are
// usable; the rows must be nested, strict, and within the width bound.
RealOracle oracle_from_table(
    const std::string& name,
    const std::vector<std::tuple<unsigned, Rational, Rational>>& rows);

// Finite fragment of the cut theory at precision p: defining systems for
// both bracket endpoints plus q_lo -> i_a and i_a -> q_hi.
struct CutFragment {
  std::string oracle_name;
  unsigned precision;
  Theory theory;
  Variable cut_variable;
  Rational lo, hi;
};

CutFragment cut_fragment(const RealOracle& o, unsigned p);

// (min, max) of the cut variable over standard models of the fragment;
// exactly the bracket endpoints.
std::pair<Rational, Rational> confinement(const CutFragment& frag,
                                          const Budget& b = {});

// Truth degree of i_a . i_a <-> i_b under both fragments at precision p.
// Requires a.a = b, checked against the brackets at every precision up
// to p; the result is >= 1 - 3*2^-p and nondecreasing in p.
Rational product_pair_check(const RealOracle& oa, const RealOracle& ob,
                            unsigned p, const Budget& b = {});

}  // namespace luk
