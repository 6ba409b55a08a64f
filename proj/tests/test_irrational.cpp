#include "luk/irrational.hpp"
#include "util.hpp"

using namespace luk;

namespace {

Rational pow2_neg(unsigned p) { return make_rational(1, 1l << p); }

// Degree of i_a.i_a <-> i_b over the bracket boxes: 1 - |max(0,2a-1) - b|
// is concave in (a, b), so its minimum over the box sits at a corner.
Rational corner_degree(const std::pair<Rational, Rational>& run_a,
                       const std::pair<Rational, Rational>& run_b) {
  Rational worst(0);
  for (const Rational& a : {run_a.first, run_a.second})
    for (const Rational& b : {run_b.first, run_b.second}) {
      Rational sq = std::max(Rational(0), Rational(2 * a - 1));
      Rational gap = sq > b ? sq - b : b - sq;
      if (gap > worst) worst = gap;
    }
  return 1 - worst;
}

}  // namespace

TEST_CASE("builtin oracle brackets") {
  auto a = sqrt2_over_2();
  CHECK(a.bracket(3) == std::make_pair(R("11/16"), R("12/16")));
  auto b = sqrt2_minus_1();
  CHECK(b.bracket(1) == std::make_pair(R("1/4"), R("1/2")));
}

TEST_CASE("brackets nest, shrink, and never collapse") {
  for (const RealOracle& o : {sqrt2_over_2(), sqrt2_minus_1()}) {
    auto prev = o.bracket(1);
    for (unsigned p = 1; p <= 12; ++p) {
      auto [lo, hi] = o.bracket(p);
      CHECK(lo < hi);  // rational exclusion: never a point
      CHECK(hi - lo <= pow2_neg(p));
      CHECK(lo >= prev.first);
      CHECK(hi <= prev.second);
      prev = {lo, hi};
    }
  }
}

TEST_CASE("cut fragments confine the cut variable to the bracket") {
  auto oracle = sqrt2_over_2();
  CutFragment frag = cut_fragment(oracle, 3);
  CHECK(frag.lo == R("11/16"));
  CHECK(frag.hi == R("3/4"));
  CHECK(frag.cut_variable == V("i_sqrt2over2"));

  auto [lo, hi] = confinement(frag);
  CHECK(lo == frag.lo);
  CHECK(hi == frag.hi);

  CHECK_THROWS(cut_fragment(oracle, 0));
}

TEST_CASE("confinement intervals nest as precision grows") {
  auto oracle = sqrt2_minus_1();
  auto prev = confinement(cut_fragment(oracle, 1));
  for (unsigned p = 2; p <= 5; ++p) {
    auto cur = confinement(cut_fragment(oracle, p));
    CHECK(cur.first >= prev.first);
    CHECK(cur.second <= prev.second);
    CHECK(cur.second - cur.first <= pow2_neg(p));
    prev = cur;
  }
}

TEST_CASE("product pair degree: bound, monotonicity, exact corner value") {
  auto a = sqrt2_over_2();
  auto b = sqrt2_minus_1();
  Rational prev(0);
  for (unsigned p = 2; p <= 6; ++p) {
    Rational degree = product_pair_check(a, b, p);
    CHECK(degree >= 1 - 3 * pow2_neg(p));
    CHECK(degree >= prev);
    CHECK(degree == corner_degree(a.bracket(p), b.bracket(p)));
    prev = degree;
  }
}

TEST_CASE("incompatible pairs are rejected") {
  CHECK_THROWS(product_pair_check(sqrt2_over_2(), sqrt2_over_2(), 4));

  // a bracket around 9/10 squares far away from sqrt2-1
  RealOracle wrong = oracle_from_table(
      "offtarget", {{1, R("7/8"), R("29/32")},
                    {2, R("57/64"), R("29/32")},
                    {3, R("57/64"), R("229/256")},
                    {4, R("915/1024"), R("229/256")}});
  CHECK_THROWS(product_pair_check(sqrt2_over_2(), wrong, 4));
}

TEST_CASE("bracket tables validate") {
  CHECK_THROWS(oracle_from_table("bad", {{3, R("1/4"), R("1/2")}}));  // too wide
  CHECK_THROWS(oracle_from_table("bad", {{1, R("1/2"), R("1/2")}}));  // empty
  CHECK_THROWS(oracle_from_table(
      "bad", {{1, R("1/4"), R("1/2")}, {2, R("1/8"), R("5/16")}}));  // not nested
  CHECK_THROWS(oracle_from_table("p0_x", {{1, R("1/4"), R("1/2")}}));

  RealOracle ok = oracle_from_table(
      "table", {{1, R("1/4"), R("1/2")}, {2, R("5/16"), R("7/16")}});
  CHECK(ok.bracket(2).first == R("5/16"));
  CHECK_THROWS(ok.bracket(3));  // precision not listed

  CutFragment frag = cut_fragment(ok, 2);
  auto [lo, hi] = confinement(frag);
  CHECK(lo == R("5/16"));
  CHECK(hi == R("7/16"));
}
