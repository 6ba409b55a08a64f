#include <algorithm>

#include "luk/semantics.hpp"
#include "util.hpp"

using namespace luk;

TEST_CASE("bookkeeping example from the constants-free reading") {
  CHECK(evaluate(P("6/13 -> 5/13"), {}) == R("12/13"));
}

TEST_CASE("strong disjunction against negation is a tautology instance") {
  CHECK(evaluate(P("x (+) ~x"), val({{"x", "1/3"}})) == 1);
}

TEST_CASE("power closed form agrees with iterated product") {
  // (~x)^4 at x = 1/5: iterated 4/5 . 4/5 . 4/5 . 4/5 = 1/5
  Valuation v = val({{"x", "1/5"}});
  Rational iterated(1);
  for (int i = 0; i < 4; ++i)
    iterated = std::max(Rational(0), Rational(iterated + R("4/5") - 1));
  CHECK(iterated == R("1/5"));
  CHECK(evaluate(P("(~x)^4"), v) == R("1/5"));

  // property: closed forms match iterated expansion for n <= 64
  TestRng rng(11);
  FormulaPtr x = Formula::var(V("x"));
  for (int round = 0; round < 120; ++round) {
    unsigned long n = 1 + rng.below(64);
    Rational value = random_unit_rational(rng, 40);
    Valuation w;
    w.set(V("x"), value);
    Rational prod(1), sum(0);
    for (unsigned long i = 0; i < n; ++i) {
      prod = std::max(Rational(0), Rational(prod + value - 1));
      sum = std::min(Rational(1), Rational(sum + value));
    }
    CHECK(evaluate(Formula::power(x, n), w) == prod);
    CHECK(evaluate(Formula::multiple(n, x), w) == sum);
  }
}

TEST_CASE("connective values on the nose") {
  CHECK(evaluate(P("x & y"), val({{"x", "2/3"}, {"y", "2/3"}})) == R("1/3"));
  CHECK(evaluate(P("x -> y"), val({{"x", "2/3"}, {"y", "1/3"}})) == R("2/3"));
  CHECK(evaluate(P("x \\/ ~x"), val({{"x", "1/2"}})) == R("1/2"));
  CHECK(evaluate(P("x <-> y"), val({{"x", "1/4"}, {"y", "3/4"}})) == R("1/2"));
  CHECK_THROWS_AS(evaluate(P("x & y"), val({{"x", "1"}})), EvalError);
}

TEST_CASE("chain evaluation") {
  CHECK(evaluate_on_chain(P("x & x"), {2}, val({{"x", "1/2"}})) == 0);
  CHECK(evaluate_on_chain(P("~x"), {6}, val({{"x", "2/6"}})) == R("2/3"));
  CHECK_THROWS_AS(evaluate_on_chain(P("x"), {6}, val({{"x", "1/4"}})), EvalError);

  // brute force over all 7 elements of the k = 6 chain: 1/3 is the only
  // element where x <-> (~x)^2 takes value 1
  FormulaPtr probe = P("x <-> (~x)^2");
  std::vector<Rational> ones;
  for (int i = 0; i <= 6; ++i) {
    Valuation v;
    v.set(V("x"), make_rational(i, 6));
    if (evaluate_on_chain(probe, {6}, v) == 1) ones.push_back(make_rational(i, 6));
  }
  CHECK(ones == std::vector<Rational>{R("1/3")});
}

TEST_CASE("chain-subalgebra coherence") {
  TestRng rng(5150);
  for (int i = 0; i < 150; ++i) {
    FormulaPtr f = random_formula(rng, 1 + rng.below(10), 3, 1, false);
    unsigned long k = 1 + rng.below(12);
    Valuation v;
    for (const auto& var : signature_of(f).variables)
      v.set(var, make_rational(rng.below(static_cast<int>(k) + 1), k));
    CHECK(evaluate_on_chain(f, {k}, v) == evaluate(f, v));
  }
}

TEST_CASE("unit solutions on chains") {
  CHECK(chain_unit_solutions(3, {6}) == std::vector<Rational>{R("1/3")});
  CHECK(chain_unit_solutions(3, {5}).empty());
  CHECK(chain_unit_solutions(2, {2}) == std::vector<Rational>{R("1/2")});
  CHECK_THROWS(chain_unit_solutions(1, {4}));
}

TEST_CASE("chain lemma probe at desk scale") {
  for (unsigned long n = 2; n <= 12; ++n)
    for (unsigned long k = 1; k <= 36; ++k) {
      auto sols = chain_unit_solutions(n, {k});
      if (k % n == 0) {
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == make_rational(1, static_cast<long>(n)));
      } else {
        CHECK(sols.empty());
      }
    }
}

TEST_CASE("bookkeeping generation") {
  auto conns = std::vector<BookConn>{BookConn::Implies};
  auto res = generate_bookkeeping({R("5/13"), R("6/13"), R("12/13")}, conns);
  auto rendered = render_all(res.theory);
  CHECK(std::count(rendered.begin(), rendered.end(),
                   "(q<6/13> -> q<5/13>) <-> q<12/13>") == 1);
  CHECK_FALSE(res.closed());  // e.g. 5/13 -> 6/13 = 1 is not in the set
  CHECK_THROWS_AS(require_closed(res), BookkeepingClosureError);
}

TEST_CASE("bookkeeping over a chain set is closed") {
  std::set<Rational> thirds{R("0"), R("1/3"), R("2/3"), R("1")};
  auto res = generate_bookkeeping(thirds, {BookConn::StrongAnd});
  CHECK(res.closed());
  auto rendered = render_all(res.theory);
  CHECK(std::count(rendered.begin(), rendered.end(),
                   "q<2/3> & q<2/3> <-> q<1/3>") == 1);
  CHECK(std::count(rendered.begin(), rendered.end(),
                   "q<1/3> & q<2/3> <-> q<0>") == 1);

  auto classical = generate_bookkeeping({R("0"), R("1")},
                                        {BookConn::StrongAnd, BookConn::Implies});
  CHECK(classical.closed());
  CHECK(classical.theory.size() == 8);  // four pairs, two connectives
  auto lines = render_all(classical.theory);
  CHECK(std::count(lines.begin(), lines.end(), "q<0> & q<1> <-> q<0>") == 1);
}

TEST_CASE("negation bookkeeping in both forms") {
  std::set<Rational> thirds{R("0"), R("1/3"), R("2/3"), R("1")};
  auto eq_form = generate_bookkeeping(thirds, {BookConn::Neg}, NegForm::Equiv);
  auto lines = render_all(eq_form.theory);
  CHECK(std::count(lines.begin(), lines.end(), "~q<1/3> <-> q<2/3>") == 1);

  auto impl_form =
      generate_bookkeeping(thirds, {BookConn::Neg}, NegForm::ImpliesZero);
  auto lines2 = render_all(impl_form.theory);
  CHECK(std::count(lines2.begin(), lines2.end(),
                   "(q<1/3> -> q<0>) <-> q<2/3>") == 1);
}

TEST_CASE("every bookkeeping instance holds under the canonical valuation") {
  std::vector<BookConn> all{BookConn::StrongAnd, BookConn::Implies,
                            BookConn::StrongOr, BookConn::Neg};
  for (int n = 2; n <= 8; ++n) {
    std::set<Rational> consts;
    for (int i = 0; i <= n; ++i) consts.insert(make_rational(i, n));
    auto res = generate_bookkeeping(consts, all);
    REQUIRE(res.closed());
    Valuation canonical;
    for (const auto& c : consts) canonical.set(Variable::q(c), c);
    for (const auto& ax : res.theory.axioms())
      CHECK(evaluate(ax, canonical) == 1);
  }
}
