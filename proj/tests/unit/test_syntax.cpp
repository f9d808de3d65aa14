#include <random>

#include "doctest.h"

#include "hhtkit/parser.hpp"
#include "hhtkit/prop.hpp"
#include "hhtkit/syntax.hpp"
#include "support/random.hpp"

using namespace hhtkit;

namespace {

Signature sig_pq() { return parse_signature("const a, b. fn s/1, f/2. pred P/1, Q/0, S/2. restrictor R, R1, R2."); }

}  // namespace

TEST_CASE("rank of propositional formulas") {
  PropFormula p = PropFormula::atom("p");
  CHECK(p.rank() == 0);
  CHECK(PropFormula::top().rank() == 0);
  CHECK(PropFormula::bot().rank() == 0);
  // {{F_a : a in A}^or, G}^and with atoms gives rank 2
  PropFormula d = PropFormula::disj({PropFormula::atom("f1"), PropFormula::atom("f2"), PropFormula::atom("f3")});
  CHECK(PropFormula::conj({d, PropFormula::atom("g")}).rank() == 2);
  CHECK(PropFormula::neg(p).rank() == 1);
  CHECK(PropFormula::neg(PropFormula::neg(p)).rank() == 2);
}

TEST_CASE("propositional sugar") {
  PropFormula p = PropFormula::atom("p");
  CHECK(PropFormula::top().is_top());
  CHECK(PropFormula::bot().is_bot());
  CHECK(PropFormula::neg(p) == PropFormula::implies(p, PropFormula::bot()));
  CHECK(parse_prop_formula("not p") == PropFormula::neg(p));
  CHECK(parse_prop_formula("p <-> q") ==
        PropFormula::conj({PropFormula::implies(p, PropFormula::atom("q")), PropFormula::implies(PropFormula::atom("q"), p)}));
  CHECK(parse_prop_formula("top").is_top());
  CHECK(parse_prop_formula("bot").is_bot());
}

TEST_CASE("propositional round trip") {
  testing::Rng rng(11);
  auto atoms = testing::atom_names(4);
  for (int i = 0; i < 300; ++i) {
    PropFormula f = testing::random_prop(rng, atoms, 4);
    INFO(f.to_string());
    CHECK(parse_prop_formula(f.to_string()) == f);
  }
}

TEST_CASE("first-order round trip") {
  Signature sig = sig_pq();
  testing::Rng rng(12);
  testing::FormulaGen gen(sig, true);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.closed(rng, 4);
    INFO(f.to_string());
    CHECK(parse_formula(f.to_string(), sig) == f);
  }
}

TEST_CASE("first-order sugar and precedence") {
  Signature sig = sig_pq();
  Formula pa = Formula::atom("P", {Term::constant("a")});
  Formula q = Formula::atom("Q");
  CHECK(Formula::top() == Formula::implies(Formula::bot(), Formula::bot()));
  CHECK(parse_formula("not P(a)", sig) == Formula::neg(pa));
  CHECK(parse_formula("P(a) & Q -> Q", sig) == Formula::implies(Formula::conj(pa, q), q));
  CHECK(parse_formula("P(a) -> Q -> P(a)", sig) == Formula::implies(pa, Formula::implies(q, pa)));
  CHECK(parse_formula("a != b", sig) == Formula::neg(Formula::equal(Term::constant("a"), Term::constant("b"))));
  // quantifiers bind tighter than binary connectives
  Formula f = parse_formula("forall x P(x) -> Q", sig);
  CHECK(f.kind() == Formula::Kind::Implies);
  CHECK(f.lhs().kind() == Formula::Kind::Forall);
  CHECK(Formula::conj_all({pa, q, pa}) == Formula::conj(Formula::conj(pa, q), pa));
}

TEST_CASE("generalized variables and second-order binders") {
  Signature sig = sig_pq();
  Formula f = parse_formula("exists (x:R1, y:R2) (P(x) & P(y))", sig);
  REQUIRE(f.is_generalized());
  CHECK(f.binders().size() == 2);
  CHECK(f.binders()[1].restrictor == "R2");
  Formula g = parse_formula("forall p/1 (p(a) -> p(a))", sig);
  CHECK(g.bound() == Variable::predicate("p", 1));
  CHECK(g.body().lhs().is_predicate_variable());
  Formula h = parse_formula("forall g^1 P(g(a))", sig);
  CHECK(h.bound() == Variable::function("g", 1));
  CHECK(parse_formula(g.to_string(), sig) == g);
  CHECK(parse_formula(h.to_string(), sig) == h);
}

TEST_CASE("parse errors carry line and column") {
  Signature sig = sig_pq();
  try {
    parse_formula("P(a) &\n  & Q", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(parse_formula("P(a, b)", sig), ParseError);  // arity
  CHECK_THROWS_AS(parse_formula("S(a)", sig), ParseError);
  CHECK_THROWS_AS(parse_prop_formula("p | "), ParseError);
  CHECK_THROWS_AS(parse_prop_formula("p $ q"), ParseError);
}

TEST_CASE("signature validation") {
  CHECK_THROWS(parse_signature("pred P/1."));
  CHECK_THROWS_WITH(parse_signature("pred P/1."), doctest::Contains("at least one object constant"));
  CHECK_THROWS(parse_signature("const a. pred P/1, P/2."));
  Signature s = parse_signature("const a, b. fn s/1. pred P/1. restrictor R.");
  CHECK(s.object_constants() == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(s.all_nullary());
  CHECK(s.is_restrictor("R"));
  CHECK(s.predicate_arity("R") == 1);
  CHECK(s.function_arity("s") == 1);
  CHECK(parse_signature(s.to_string()) == s);
}

TEST_CASE("formula documents") {
  FormulaDocument d = parse_formula_document("const a. pred P/1.\nforall x P(x) -> P(a);\n");
  CHECK(d.formula.to_string() == "forall x P(x) -> P(a)");
  CHECK_THROWS_AS(parse_formula_document("pred P/0.\nP"), Error);
}
