#include "doctest.h"

#include "hhtkit/parser.hpp"
#include "hhtkit/transform.hpp"
#include "support/random.hpp"

using namespace hhtkit;

namespace {

Signature sig() { return parse_signature("const a, b. fn s/1, f/1. pred P/1, Q/0, P2/2. restrictor R, R1, R2."); }
Formula F(const std::string& s) { return parse_formula(s, sig()); }

}  // namespace

TEST_CASE("substitution of terms") {
  Variable x = Variable::object("x");
  CHECK(substitute_term(F("forall x P(x) -> P(x)"), x, Term::constant("a")).result == F("forall x P(x) -> P(a)"));
  CHECK(substitute_term(F("P(x)"), x, parse_term("s(a)", sig())).result == F("P(s(a))"));

  SubstitutionResult r = substitute_term(F("exists y P2(x, y)"), x, parse_term("f(y)", sig()));
  CHECK_FALSE(r.substitutable);
  CHECK_THROWS_AS(substitute_term_checked(F("exists y P2(x, y)"), x, parse_term("f(y)", sig())), CaptureViolation);
  CHECK(substitute_term(F("exists y P2(x, y)"), x, Term::constant("a")).substitutable);
}

TEST_CASE("restrictor elimination") {
  CHECK(eliminate_restrictors(F("forall x P(x) -> forall (x:R) P(x)")) == F("forall x P(x) -> forall x (R(x) -> P(x))"));
  CHECK(eliminate_restrictors(F("exists (x:R1, y:R1) (P(x) & P(y))")) ==
        F("exists x exists y (R1(x) & R1(y) & (P(x) & P(y)))"));
  Formula plain = F("forall x (P(x) | not P(x)) -> Q");
  CHECK(eliminate_restrictors(plain) == plain);
  CHECK_FALSE(has_restrictors(eliminate_restrictors(F("forall (x:R) exists (y:R2) P2(x, y)"))));
}

TEST_CASE("free variables") {
  CHECK(free_variables(F("forall x P(x)")).empty());
  CHECK(free_variables(F("P(x) -> Q")) == VariableSet{Variable::object("x")});
  CHECK(free_variables(F("P(x) -> P(y)")) == VariableSet{Variable::object("x"), Variable::object("y")});
  // comprehension body: only the free variables of F outside x remain
  Formula c = F("exists p/1 forall x (p(x) <-> P2(x, y))");
  CHECK(free_variables(c) == VariableSet{Variable::object("y")});
  CHECK(free_variables(F("q(a)")) == VariableSet{Variable::predicate("q", 1)});
  CHECK(is_closed(universal_closure(F("P2(x, y) -> q(x)"))));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equivalent(F("forall x P(x)"), F("forall y P(y)")));
  CHECK(alpha_equivalent(F("exists x forall y P2(x, y)"), F("exists y forall x P2(y, x)")));
  CHECK_FALSE(alpha_equivalent(F("exists x forall y P2(x, y)"), F("exists x forall y P2(y, x)")));
  CHECK_FALSE(alpha_equivalent(F("forall x P(x) -> P(x)"), F("forall y P(y) -> P(y)")));
  CHECK(alpha_equivalent(F("forall p/1 p(a)"), F("forall q/1 q(a)")));
}

TEST_CASE("predicate substitution") {
  Variable p = Variable::predicate("p", 1);
  Variable x = Variable::object("x");
  auto r = substitute_predicate(F("forall y (p(y) -> p(s(y)))"), p, {x}, F("P2(x, a)"));
  CHECK(r.substitutable);
  CHECK(r.result == F("forall y (P2(y, a) -> P2(s(y), a))"));
  auto bad = substitute_predicate(F("forall y p(y)"), p, {x}, F("P2(x, y)"));
  CHECK_FALSE(bad.substitutable);
}

TEST_CASE("substitution agrees with closed-term instantiation") {
  // randomized: substituting a constant for a free variable and re-checking
  // that no free occurrence of the variable is left
  Signature s = sig();
  testing::Rng rng(21);
  testing::FormulaGen gen(s, true);
  Variable x = Variable::object("x");
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(rng, 4, {x});
    Formula g = substitute_term(f, x, Term::constant("b")).result;
    CHECK_FALSE(occurs_free(g, x));
    CHECK(free_variables(g).size() <= free_variables(f).size());
  }
}
