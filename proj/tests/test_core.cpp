#include "luk/formula.hpp"
#include "luk/parse.hpp"
#include "util.hpp"

using namespace luk;

TEST_CASE("single-operator parse") {
  FormulaPtr f = P("x -> x");
  CHECK(f->conn() == Conn::Implies);
  CHECK(f->lhs()->variable().name() == "x");
  CHECK(structurally_equal(f, Formula::implies(Formula::var(V("x")),
                                               Formula::var(V("x")))));
}

TEST_CASE("constants parse exactly") {
  FormulaPtr f = P("6/13 -> 5/13");
  CHECK(f->lhs()->constant_value() == R("6/13"));
  CHECK(f->rhs()->constant_value() == R("5/13"));
  CHECK(P("2/4")->constant_value() == R("1/2"));  // lowest terms on input
}

TEST_CASE("unary binds tighter than power") {
  FormulaPtr f = P("~x ^ 4");
  REQUIRE(f->conn() == Conn::Power);
  CHECK(f->arity_bound() == 4);
  CHECK(f->lhs()->conn() == Conn::Neg);
}

TEST_CASE("rendering") {
  CHECK(render_formula(P("x -> x")) == "x -> x");
  CHECK(render_formula(Formula::power(Formula::neg(Formula::var(V("x"))), 2)) ==
        "(~x)^2");
  CHECK(render_formula(Formula::multiple(3, Formula::var(V("q<1/4>")))) ==
        "3*q<1/4>");
  CHECK(render_formula(P("(q<1/3> -> q<0>) <-> q<2/3>")) ==
        "(q<1/3> -> q<0>) <-> q<2/3>");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(P("x -> "), ParseError);
  CHECK_THROWS_AS(P("x <-> y <-> z"), ParseError);  // non-associative
  CHECK_THROWS_AS(P("3/2"), ParseError);            // constant out of range
  CHECK_THROWS_AS(P("x^0"), ParseError);
  CHECK_THROWS_AS(P("0*x"), ParseError);
  CHECK_THROWS_AS(P("q<5/4>"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  try {
    P("x & & y");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("q-variable indices keep their surface form") {
  FormulaPtr f = P("q<2/4>");
  CHECK(f->variable().name() == "q<2/4>");
  CHECK(*f->variable().q_index() == R("1/2"));
  CHECK(f->variable() != P("q<1/2>")->variable());
  CHECK(render_formula(f) == "q<2/4>");
}

TEST_CASE("variable namespaces") {
  CHECK(V("x").kind() == Variable::Kind::Plain);
  CHECK(V("q<1/3>").kind() == Variable::Kind::QConstant);
  CHECK(V("p3_y0").kind() == Variable::Kind::Auxiliary);
  CHECK(V("p3_y0").aux_scope() == 3);
  CHECK(Variable::aux(7, "y2").name() == "p7_y2");
  CHECK(is_reserved_name("p0_u1"));
  CHECK(is_reserved_name("q<1/2>"));
  CHECK_FALSE(is_reserved_name("pride"));  // no digits+underscore: plain
  CHECK_THROWS(Variable::named("X"));
  CHECK_THROWS(Variable::named("1x"));
}

TEST_CASE("round trip: parse after render is the identity") {
  TestRng rng(2024);
  for (int i = 0; i < 600; ++i) {
    FormulaPtr f = random_formula(rng, 1 + rng.below(14), 3, 9, true);
    FormulaPtr back = P(render_formula(f));
    CHECK_MESSAGE(structurally_equal(f, back), render_formula(f));
  }
}

TEST_CASE("round trip covers q and auxiliary variables") {
  FormulaPtr f = P("p0_y1 <-> (q<1/3> & p0_y0)^2");
  CHECK(structurally_equal(f, P(render_formula(f))));
}

TEST_CASE("expansion shapes") {
  FormulaPtr x = Formula::var(V("x"));
  FormulaPtr y = Formula::var(V("y"));

  FormulaPtr cube = expand_abbreviations(Formula::power(x, 3), ExpandMode::Full);
  CHECK(structurally_equal(
      cube, Formula::strong_and(x, Formula::strong_and(x, x))));

  FormulaPtr twice =
      expand_abbreviations(Formula::multiple(2, x), ExpandMode::Full);
  CHECK(structurally_equal(
      twice, Formula::neg(Formula::strong_and(Formula::neg(x), Formula::neg(x)))));

  FormulaPtr eq = expand_abbreviations(Formula::equiv(x, y), ExpandMode::Full);
  CHECK(structurally_equal(eq, Formula::strong_and(Formula::implies(x, y),
                                                   Formula::implies(y, x))));

  // solver basis keeps the lattice connectives
  FormulaPtr kept = expand_abbreviations(P("x /\\ (y \\/ x)"), ExpandMode::SolverBasis);
  CHECK(kept->conn() == Conn::Min);
  FormulaPtr gone = expand_abbreviations(P("x /\\ y"), ExpandMode::Full);
  CHECK(gone->conn() == Conn::StrongAnd);
}

namespace {

int count_var_leaves(const FormulaPtr& f) {
  if (f->conn() == Conn::Var) return 1;
  if (f->conn() == Conn::Constant) return 0;
  int c = count_var_leaves(f->lhs());
  if (f->rhs()) c += count_var_leaves(f->rhs());
  return c;
}

}  // namespace

TEST_CASE("full expansion of x^n has exactly n occurrences") {
  FormulaPtr x = Formula::var(V("x"));
  for (unsigned long n = 1; n <= 9; ++n) {
    FormulaPtr e = expand_abbreviations(Formula::power(x, n), ExpandMode::Full);
    CHECK(count_var_leaves(e) == static_cast<int>(n));
    CHECK(Integer(e->size()) == expanded_size(Formula::power(x, n)));
  }
}

TEST_CASE("expanded_size matches materialized expansion") {
  TestRng rng(77);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = random_formula(rng, 1 + rng.below(10), 3, 6, true);
    FormulaPtr e = expand_abbreviations(f, ExpandMode::Full);
    CHECK(expanded_size(f) == Integer(e->size()));
  }
}

TEST_CASE("expansion soundness under evaluation") {
  TestRng rng(31337);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = random_formula(rng, 1 + rng.below(12), 3, 8, true);
    Valuation v = random_valuation(rng, f, 12);
    Rational direct = evaluate(f, v);
    CHECK(direct == evaluate(expand_abbreviations(f, ExpandMode::SolverBasis), v));
    CHECK(direct == evaluate(expand_abbreviations(f, ExpandMode::Full), v));
  }
}

TEST_CASE("signature") {
  Signature s1 = signature_of(P("x -> 1/2"));
  CHECK(s1.variables == std::set<Variable>{V("x")});
  CHECK(s1.constants == std::set<Rational>{R("1/2")});

  Signature s2 = signature_of(P("0 -> x"));
  CHECK(s2.variables.size() == 1);
  CHECK(s2.constants.empty());  // 0 and 1 are not collected

  Signature s3 = signature_of(P("q<1/3> & y"));
  CHECK(s3.variables == std::set<Variable>{V("q<1/3>"), V("y")});
  CHECK(s3.constants.empty());  // q-variables are variables, not constants

  CHECK(is_l_formula(P("0 -> x")));
  CHECK_FALSE(is_l_formula(P("x -> 1/2")));
}

TEST_CASE("theories keep insertion order and duplicates") {
  Theory t;
  t.add(P("x -> y"));
  t.add(P("x -> y"));
  t.add(P("y"));
  CHECK(t.size() == 3);
  CHECK(render_formula(t.axioms()[2]) == "y");
}
