#include "doctest.h"

#include "hhtkit/error.hpp"
#include "hhtkit/ht.hpp"
#include "hhtkit/parser.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace hhtkit;
using ht::Interpretation;
using ht::World;

namespace {

PropFormula P(const std::string& s) { return parse_prop_formula(s); }

using testing::g3;

}  // namespace

TEST_CASE("satisfaction examples") {
  Interpretation pp({"p"}, {"p"});
  Interpretation tp({}, {"p"});
  Interpretation none;
  CHECK(ht::satisfies(pp, World::Here, P("p")));
  CHECK(ht::satisfies(tp, World::Here, P("not not p")));
  CHECK_FALSE(ht::satisfies(tp, World::Here, P("p")));
  CHECK(ht::satisfies(tp, World::There, P("p")));
  for (const auto& i : {pp, tp, none})
    for (World w : {World::Here, World::There}) {
      CHECK(ht::satisfies(i, w, PropFormula::top()));
      CHECK_FALSE(ht::satisfies(i, w, PropFormula::bot()));
    }
  CHECK_FALSE(ht::models(tp, P("p | not p")));
  CHECK(ht::models(none, P("not p")));
  CHECK_THROWS_AS(Interpretation({"p"}, {}), std::invalid_argument);
}

TEST_CASE("g3 examples") {
  Interpretation tp({}, {"p"});
  CHECK(ht::g3_eval(tp, P("p")) == 1);
  CHECK(ht::g3_eval(tp, P("not not p")) == 2);
  CHECK(ht::g3_eval(tp, P("bot")) == 0);
  CHECK(ht::g3_eval(Interpretation({"p"}, {"p"}), P("bot")) == 0);
}

TEST_CASE("validity examples") {
  CHECK(ht::ht_valid(P("p | (p -> q) | not q")).valid);
  CHECK(ht::ht_valid(P("top <-> not bot")).valid);
  CHECK(ht::ht_valid(P("not p | not not p")).valid);
  auto lem = ht::ht_valid(P("p | not p"));
  REQUIRE_FALSE(lem.valid);
  CHECK(*lem.countermodel == Interpretation({}, {"p"}));
  CHECK(ht::render(*lem.countermodel, lem.atoms) == "p: there-only\n");
  auto dne = ht::ht_valid(P("not not p -> p"));
  REQUIRE_FALSE(dne.valid);
  CHECK(*dne.countermodel == Interpretation({}, {"p"}));
  // Peirce's law fails too
  CHECK_FALSE(ht::ht_valid(P("((p -> q) -> p) -> p")).valid);
}

TEST_CASE("canonical enumeration order") {
  std::vector<std::string> atoms{"p", "q"};
  CHECK(ht::interpretation_at(atoms, 0) == Interpretation());
  CHECK(ht::interpretation_at(atoms, 1) == Interpretation({}, {"q"}));
  CHECK(ht::interpretation_at(atoms, 2) == Interpretation({"q"}, {"q"}));
  CHECK(ht::interpretation_at(atoms, 3) == Interpretation({}, {"p"}));
  CHECK(ht::interpretation_at(atoms, 8) == Interpretation({"p", "q"}, {"p", "q"}));
  // first failure of q | not q over {p, q} sits at index 1
  auto r = ht::ht_valid(P("(p -> p) & (q | not q)"));
  REQUIRE_FALSE(r.valid);
  CHECK(r.index == 1);
  CHECK(ht::render(*r.countermodel, r.atoms) == "p: absent\nq: there-only\n");
}

TEST_CASE("persistence, g3 agreement and classical collapse") {
  testing::Rng rng(31);
  auto atoms = testing::atom_names(4);
  for (int n = 0; n < 2000; ++n) {
    PropFormula f = testing::random_prop(rng, atoms, 4);
    Interpretation i = testing::random_interpretation(rng, atoms);
    bool h = ht::satisfies(i, World::Here, f);
    bool t = ht::satisfies(i, World::There, f);
    CHECK((!h || t));
    int v = g3(i, f);
    CHECK(ht::g3_eval(i, f) == v);
    CHECK(h == (v == 2));
    CHECK(t == (v >= 1));
    // total interpretations behave classically
    Interpretation tot(i.there(), i.there());
    CHECK(ht::models(tot, f) == ht::classical_eval(i.there(), f));
  }
}

TEST_CASE("validity agrees with an exhaustive oracle and is thread-independent") {
  testing::Rng rng(32);
  auto atoms = testing::atom_names(3);
  for (int n = 0; n < 200; ++n) {
    PropFormula f = testing::random_prop(rng, atoms, 3);
    auto fa = f.atoms();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < fa.size(); ++k) total *= 3;
    std::optional<std::uint64_t> first;
    for (std::uint64_t idx = 0; idx < total && !first; ++idx)
      if (g3(ht::interpretation_at(fa, idx), f) != 2) first = idx;
    auto r1 = ht::ht_valid(f);
    auto r4 = ht::ht_valid(f, {20, 4});
    CHECK(r1.valid == !first.has_value());
    CHECK(r4.valid == r1.valid);
    if (first) {
      CHECK(r1.index == *first);
      CHECK(r4.index == *first);
      CHECK(r4.countermodel == r1.countermodel);
    }
  }
}

TEST_CASE("atom budget") {
  std::vector<PropFormula> parts;
  for (int i = 0; i < 5; ++i) parts.push_back(PropFormula::atom("x" + std::to_string(i)));
  CHECK_THROWS_AS(ht::ht_valid(PropFormula::disj(parts), {4, 1}), BudgetExceeded);
}
