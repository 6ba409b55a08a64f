#include <numeric>

#include "luk/constants.hpp"
#include "util.hpp"

using namespace luk;

namespace {

// Minimum and maximum of the principal variable over the system's models.
std::pair<Rational, Rational> principal_range(const DefiningSystem& sys) {
  Encoded e = encode(sys.theory, Formula::var(sys.principal));
  OptimizationOutcome lo = optimize(e.problem);
  REQUIRE(lo.optimal());
  e.problem.set_objective(e.problem.objective(), Direction::Maximize);
  OptimizationOutcome hi = optimize(e.problem);
  REQUIRE(hi.optimal());
  return {lo.value, hi.value};
}

std::size_t serialized_size(const Theory& t) {
  std::size_t total = 0;
  for (const auto& ax : t.axioms()) total += render_formula(ax).size() + 1;
  return total;
}

}  // namespace

TEST_CASE("unit fraction, naive") {
  AuxScopes scopes;
  DefiningSystem sys = define_unit_fraction(2, DefMode::Naive, scopes);
  CHECK(render_all(sys.theory) == std::vector<std::string>{"q<1/2> <-> ~q<1/2>"});
  CHECK(sys.principal.name() == "q<1/2>");
  CHECK(sys.auxiliaries.empty());
  CHECK_THROWS(define_unit_fraction(1, DefMode::Naive, scopes));
}

TEST_CASE("unit fraction, poly") {
  AuxScopes scopes;
  DefiningSystem five = define_unit_fraction(5, DefMode::Poly, scopes);
  // n-1 = 4 = 100 in binary: two squarings, the product is y2 alone
  CHECK(render_all(five.theory) ==
        std::vector<std::string>{
            "p0_y0 <-> ~q<1/5>",
            "p0_y1 <-> p0_y0^2",
            "p0_y2 <-> p0_y1^2",
            "q<1/5> <-> p0_y2",
        });

  DefiningSystem three = define_unit_fraction(3, DefMode::Poly, scopes);
  CHECK(three.theory.size() == 3);  // n-1 = 10 in binary
  auto [lo, hi] = principal_range(three);
  CHECK(lo == R("1/3"));
  CHECK(hi == R("1/3"));
  // pools are disjoint across calls
  CHECK(three.auxiliaries.front().name() == "p1_y0");
}

TEST_CASE("define rational") {
  AuxScopes scopes;
  DefiningSystem zero = define_rational(0, 7, DefMode::Naive, scopes);
  CHECK(render_all(zero.theory) == std::vector<std::string>{"q<0/7> <-> 0"});

  DefiningSystem one = define_rational(1, 1, DefMode::Naive, scopes);
  CHECK(render_all(one.theory) == std::vector<std::string>{"q<1> <-> 1"});

  DefiningSystem two_thirds = define_rational(2, 3, DefMode::Naive, scopes);
  CHECK(render_all(two_thirds.theory) ==
        std::vector<std::string>{"q<1/3> <-> (~q<1/3>)^2",
                                 "q<2/3> <-> 2*q<1/3>"});

  DefiningSystem tq = define_rational(3, 4, DefMode::Poly, scopes);
  auto [lo, hi] = principal_range(tq);
  CHECK(lo == R("3/4"));
  CHECK(hi == R("3/4"));

  CHECK_THROWS(define_rational(5, 4, DefMode::Naive, scopes));
}

TEST_CASE("canonical-model uniqueness across modes") {
  for (unsigned long n = 2; n <= 8; ++n)
    for (unsigned long m = 1; m < n; ++m)
      for (DefMode mode : {DefMode::Naive, DefMode::Poly}) {
        AuxScopes scopes;
        DefiningSystem sys = define_rational(m, n, mode, scopes);
        auto [lo, hi] = principal_range(sys);
        Rational expect = make_rational(static_cast<long>(m), static_cast<long>(n));
        CHECK_MESSAGE(lo == expect, "m=", m, " n=", n);
        CHECK(hi == expect);
      }
}

TEST_CASE("tq_fin shares unit definitions per denominator") {
  CHECK(build_tq_fin({R("1/2")}, DefMode::Naive).size() == 1);
  CHECK(build_tq_fin({R("1/3"), R("2/3")}, DefMode::Naive).size() == 2);

  Theory t = build_tq_fin({R("1/2"), R("1/3")}, DefMode::Poly);
  std::set<int> scopes;
  for (const auto& v : signature_of(t).variables)
    if (auto s = v.aux_scope()) scopes.insert(*s);
  CHECK(scopes.size() == 2);  // disjoint pools

  CHECK_THROWS(build_tq_fin({R("0")}, DefMode::Naive));
  CHECK_THROWS(build_tq_fin({R("1")}, DefMode::Naive));
}

TEST_CASE("star translation") {
  StarTranslation st = star_translate(Theory{}, P("x -> 1/2"), DefMode::Naive);
  CHECK(st.t_star.empty());
  CHECK(render_formula(st.f_star) == "x -> q<1/2>");
  CHECK(render_all(st.tq_fin) == std::vector<std::string>{"q<1/2> <-> ~q<1/2>"});

  StarTranslation id = star_translate(Theory{}, P("x -> x"), DefMode::Naive);
  CHECK(render_formula(id.f_star) == "x -> x");
  CHECK(id.tq_fin.empty());

  Theory t;
  t.add(P("1/3 -> p"));
  StarTranslation sh = star_translate(t, P("p (+) 1/3"), DefMode::Naive);
  CHECK(render_all(sh.t_star) == std::vector<std::string>{"q<1/3> -> p"});
  CHECK(render_formula(sh.f_star) == "p (+) q<1/3>");
  CHECK(sh.tq_fin.size() == 1);  // one shared definition of 1/3

  CHECK_THROWS_AS(star_translate(Theory{}, P("q<1/2> -> x"), DefMode::Naive),
                  NameCollisionError);
  CHECK_THROWS_AS(star_translate(Theory{}, P("p0_y1 -> x"), DefMode::Naive),
                  NameCollisionError);
}

TEST_CASE("star translation keeps 0 and 1 fixed") {
  StarTranslation st = star_translate(Theory{}, P("0 -> (x & 1)"), DefMode::Poly);
  CHECK(render_formula(st.f_star) == "0 -> x & 1");
  CHECK(st.tq_fin.empty());
}

TEST_CASE("rpl decision routes") {
  auto routes = {RplRoute::Direct, RplRoute::TranslatedNaive,
                 RplRoute::TranslatedPoly};

  // min over x of max(x, 1-x) is 1/2, so 1/2 -> (x \/ ~x) always holds
  for (RplRoute r : routes)
    CHECK(decide_rpl(Theory{}, P("1/2 -> (x \\/ ~x)"), r).holds);

  // 2/3 -> 1/2 = 5/6 < 1 at the piece intersection x = 1/2
  for (RplRoute r : routes) {
    Consequence c = decide_rpl(Theory{}, P("2/3 -> (x \\/ ~x)"), r);
    REQUIRE_FALSE(c.holds);
    CHECK(*c.value == R("5/6"));
    CHECK(*c.countermodel->find(V("x")) == R("1/2"));
  }

  // 3 * 1/3 = 1 by the closed form min(1, 3x)
  Theory t;
  t.add(P("p <-> 1/3"));
  for (RplRoute r : routes)
    CHECK(decide_rpl(t, P("p (+) p (+) p"), r).holds);
}

TEST_CASE("route agreement on random consecutions") {
  TestRng rng(8128);
  for (int i = 0; i < 20; ++i) {
    Theory t;
    if (rng.chance(1, 2)) t.add(random_formula(rng, 1 + rng.below(6), 3, 12, true));
    FormulaPtr f = random_formula(rng, 1 + rng.below(10), 3, 12, true);

    Consequence direct = decide_rpl(t, f, RplRoute::Direct);
    Consequence naive = decide_rpl(t, f, RplRoute::TranslatedNaive);
    Consequence poly = decide_rpl(t, f, RplRoute::TranslatedPoly);
    CHECK(direct.holds == naive.holds);
    CHECK(direct.holds == poly.holds);
    if (!direct.holds) {
      CHECK(*direct.value == *naive.value);
      CHECK(*direct.value == *poly.value);
    }
  }
}

TEST_CASE("tq_fin derives sampled bookkeeping instances") {
  std::vector<BookConn> all{BookConn::StrongAnd, BookConn::Implies,
                            BookConn::StrongOr, BookConn::Neg};
  for (int n : {3, 5}) {
    std::set<Rational> consts;
    for (int i = 0; i <= n; ++i) consts.insert(make_rational(i, n));
    Theory book = require_closed(generate_bookkeeping(consts, all));
    TestRng rng(n);
    for (int k = 0; k < 6; ++k) {
      const FormulaPtr& inst =
          book.axioms()[rng.below(static_cast<int>(book.size()))];
      std::set<Rational> used;
      for (const auto& v : signature_of(inst).variables) {
        REQUIRE(v.q_index().has_value());
        const Rational& q = *v.q_index();
        if (q > 0 && q < 1) used.insert(q);
      }
      Theory tq = build_tq_fin(used, DefMode::Naive);
      // instances touching only q<0>/q<1> need their trivial definitions
      AuxScopes scopes;
      for (const auto& v : signature_of(inst).variables) {
        if (*v.q_index() == 0)
          tq.extend(define_rational(0, 1, DefMode::Naive, scopes).theory);
        if (*v.q_index() == 1)
          tq.extend(define_rational(1, 1, DefMode::Naive, scopes).theory);
      }
      CHECK(decide_consequence(tq, inst).holds);
    }
  }
}

TEST_CASE("denominator-3 redundancy replay") {
  Theory axioms;
  axioms.add(P("q<2/3> & q<2/3> <-> q<1/3>"));
  axioms.add(P("(q<1/3> -> q<0>) <-> q<2/3>"));
  axioms.add(P("q<0> <-> 0"));

  CHECK(decide_consequence(axioms, P("q<1/3> & q<2/3> <-> q<0>")).holds);
  CHECK(decide_consequence(axioms, P("q<1/3> & q<1/3> <-> q<0>")).holds);
  CHECK(decide_consequence(axioms, P("q<1/3> <-> (~q<1/3>)^2")).holds);
}

TEST_CASE("poly systems stay small, naive expansions do not") {
  for (int k : {4, 8, 12}) {
    unsigned long n = 1ul << k;
    for (unsigned long nn : {n, n + 1}) {
      AuxScopes s1, s2;
      DefiningSystem poly = define_unit_fraction(nn, DefMode::Poly, s1);
      DefiningSystem naive = define_unit_fraction(nn, DefMode::Naive, s2);
      std::size_t bits = 0;
      for (unsigned long v = nn; v; v >>= 1) ++bits;
      CHECK(serialized_size(poly.theory) <= 8 * bits * bits);
      Integer naive_nodes = expanded_size(naive.theory.axioms()[0]);
      CHECK(naive_nodes >= Integer(static_cast<unsigned long>(nn)));
    }
  }
}
