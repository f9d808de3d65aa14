#include "doctest.h"

#include "hhtkit/herbrand.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/transform.hpp"
#include "support/random.hpp"

using namespace hhtkit;
using herbrand::Evaluator;
using herbrand::World;

namespace {

GroundAtom ga(const std::string& p, std::vector<std::string> args = {}) {
  GroundAtom a{p, {}};
  for (auto& c : args) a.args.push_back(Term::constant(c));
  return a;
}

// psi sending every ground atom to a propositional atom of the same name.
Substitution identity_substitution(const Signature& sig) {
  Substitution psi(sig);
  for (const auto& a : Evaluator(sig).herbrand_base()) psi.set(a, PropFormula::atom(herbrand::compact(a)));
  return psi;
}

}  // namespace

TEST_CASE("hat evaluation") {
  Signature sig = parse_signature("const a, b. fn f/1. pred P/1.");
  Evaluator ev(sig, InstantiationMode::bounded(1));
  CHECK(ev.hat_eval(Term::constant("a")) == Term::constant("a"));
  // universe at depth 1: a, b, f(a), f(b); the name sends a to b
  herbrand::Names names;
  herbrand::FunctionName g{1, std::vector<int>(4, 0)};
  g.table[0] = 1;
  names.functions["g"] = g;
  Term ga_ = Term::function_variable("g", {Term::constant("a")});
  CHECK(ev.hat_eval(ga_, names) == Term::constant("b"));
  CHECK(ev.hat_eval(Term::function("f", {ga_}), names).to_string() == "f(b)");
}

TEST_CASE("atomic and equality clauses") {
  Signature sig = parse_signature("const a, b. pred P/1.");
  Evaluator ev(sig);
  herbrand::Interpretation j({}, {ga("P", {"a"})});
  CHECK_FALSE(ev.satisfies(j, World::Here, parse_formula("P(a)", sig)));
  CHECK(ev.satisfies(j, World::There, parse_formula("P(a)", sig)));
  CHECK(ev.satisfies(j, World::Here, parse_formula("a = a", sig)));
  CHECK_FALSE(ev.satisfies(j, World::Here, parse_formula("a = b", sig)));
  CHECK_THROWS(herbrand::Interpretation({ga("P", {"a"})}, {}));
}

TEST_CASE("brute-force validity examples") {
  Signature sig = parse_signature("const a, b. pred P/1, Q/0.");
  CHECK(herbrand::hht_valid_bruteforce(sig, parse_formula("P(a) | (P(a) -> Q) | not Q", sig)).valid);
  auto lem = herbrand::hht_valid_bruteforce(sig, parse_formula("P(a) | not P(a)", sig));
  REQUIRE_FALSE(lem.valid);
  CHECK(lem.countermodel->state(ga("P", {"a"})) == herbrand::AtomState::ThereOnly);
  CHECK(herbrand::hht_valid_bruteforce(sig, parse_formula("forall p/1 (p(a) & p(b) -> forall x p(x))", sig)).valid);
  CHECK(herbrand::hht_valid_bruteforce(sig, parse_formula("exists x (P(x) -> forall x P(x))", sig)).valid);
  CHECK_FALSE(herbrand::hht_valid_bruteforce(sig, parse_formula("forall x (P(x) | not P(x))", sig)).valid);
}

TEST_CASE("comprehension over a one-element universe") {
  Signature sig = parse_signature("const a. pred P/1.");
  Evaluator ev(sig);
  Formula c = parse_formula("exists p/1 forall x (p(x) <-> P(x))", sig);
  for (std::uint64_t k = 0; k < 3; ++k) {
    ht::Interpretation i = ht::interpretation_at({"P(a)"}, k);
    herbrand::Interpretation j(i.here().empty() ? std::set<GroundAtom>{} : std::set<GroundAtom>{ga("P", {"a"})},
                               i.there().empty() ? std::set<GroundAtom>{} : std::set<GroundAtom>{ga("P", {"a"})});
    CHECK(ev.satisfies(j, World::Here, c));
  }
}

TEST_CASE("budget is checked before enumeration") {
  Signature sig = parse_signature("const a, b, c. pred P/2.");
  CHECK_THROWS_AS(herbrand::hht_valid_bruteforce(sig, parse_formula("forall p/2 (p(a, b) -> p(a, b))", sig), 1000),
                  BudgetExceeded);
}

TEST_CASE("brute force agrees with the propositional instance") {
  Signature sig = parse_signature("const a, b. pred P/1, Q/0.");
  Substitution psi = identity_substitution(sig);
  testing::Rng rng(41);
  testing::FormulaGen gen(sig);
  for (int n = 0; n < 150; ++n) {
    Formula f = gen.closed(rng, 3);
    INFO(f.to_string());
    bool via_instance = ht::ht_valid(instantiate(psi, f, InstantiationMode::exact())).valid;
    CHECK(herbrand::hht_valid_bruteforce(sig, f).valid == via_instance);
  }
}

TEST_CASE("lift") {
  Signature sig = parse_signature("const a1, a2, a3. pred P/1. restrictor R.");
  Substitution psi(sig);
  psi.set(ga("P", {"a1"}), PropFormula::atom("p"));
  psi.set(ga("P", {"a2"}), PropFormula::atom("q"));
  psi.set(ga("P", {"a3"}), PropFormula::top());
  psi.set(ga("R", {"a1"}), PropFormula::top());
  psi.set(ga("R", {"a2"}), PropFormula::top());
  psi.set(ga("R", {"a3"}), PropFormula::bot());
  ht::Interpretation i({"p"}, {"p", "q"});
  herbrand::Interpretation j = herbrand::lift(psi, i);
  CHECK(j.here() == std::set<GroundAtom>{ga("P", {"a1"}), ga("P", {"a3"}), ga("R", {"a1"}), ga("R", {"a2"})});
  CHECK(j.state(ga("P", {"a2"})) == herbrand::AtomState::ThereOnly);
  CHECK(j.state(ga("R", {"a3"})) == herbrand::AtomState::Absent);
  CHECK(herbrand::lifting_check(psi, i, parse_formula("forall x P(x)", sig)));
  CHECK(herbrand::lifting_check(psi, i, parse_formula("forall (x:R) P(x)", sig)));
  CHECK(herbrand::lifting_check(psi, i, parse_formula("forall x P(x) -> forall (x:R) P(x)", sig)));
}

TEST_CASE("randomized lifting and persistence") {
  Signature sig = parse_signature("const a, b. pred P/1, Q/0, S/2. restrictor R.");
  testing::Rng rng(42);
  testing::FormulaGen gen(sig, true);
  auto atoms = testing::atom_names(3);
  Evaluator ev(sig);
  for (int n = 0; n < 200; ++n) {
    Formula f = gen.closed(rng, 4);
    Substitution psi = testing::random_substitution(rng, sig, atoms, 2);
    ht::Interpretation i = testing::random_interpretation(rng, atoms);
    INFO(f.to_string());
    CHECK(herbrand::lifting_check(psi, i, f));
    herbrand::Interpretation j = herbrand::lift(psi, i);
    if (ev.satisfies(j, World::Here, f)) CHECK(ev.satisfies(j, World::There, f));
  }
}

TEST_CASE("rendering") {
  Signature sig = parse_signature("const a, b. pred S/2.");
  herbrand::Interpretation j({ga("S", {"a", "b"})}, {ga("S", {"a", "b"}), ga("S", {"b", "a"})});
  Evaluator ev(sig);
  CHECK(herbrand::render(j, ev.herbrand_base()) ==
        "S(a,a): absent\nS(a,b): both\nS(b,a): there-only\nS(b,b): absent\n");
}
