#include "doctest.h"

#include "hhtkit/builder.hpp"
#include "hhtkit/kernel.hpp"
#include "hhtkit/parser.hpp"

using namespace hhtkit;
using namespace hhtkit::kernel;

namespace {

const char* kHeader = "const a, b.\npred P/1, Q/0.\nlevel HHT;\n\n";

const char* kIdentity =
    "1: (P(a) -> (P(a) -> P(a)) -> P(a)) -> (P(a) -> P(a) -> P(a)) -> P(a) -> P(a)\n"
    "    by axiom s with F := P(a), G := P(a) -> P(a), H := P(a);\n"
    "2: P(a) -> (P(a) -> P(a)) -> P(a) by axiom k with F := P(a), G := P(a) -> P(a);\n"
    "3: (P(a) -> P(a) -> P(a)) -> P(a) -> P(a) by mp 2 1;\n"
    "4: P(a) -> P(a) -> P(a) by axiom k with F := P(a), G := P(a);\n"
    "5: P(a) -> P(a) by mp 4 3;\n";

Proof proof(const std::string& body, const std::string& header = kHeader) { return parse_proof(header + body); }

ProofError rejection(const Proof& p) {
  try {
    check_proof(p);
  } catch (const ProofError& e) {
    return e;
  }
  FAIL("proof was accepted");
  return ProofError(ErrorKind::SchemaMismatch, 0, "", "");
}

}  // namespace

TEST_CASE("identity derivation") {
  Proof p = proof(kIdentity);
  CHECK(p.lines.size() == 5);
  CHECK(check_proof(p).to_string() == "P(a) -> P(a)");
  CHECK(conclusion_for_pipeline(p).to_string() == "P(a) -> P(a)");
  // rendering reproduces the proof
  Proof again = parse_proof(p.to_string());
  CHECK(again.to_string() == p.to_string());
  CHECK(check_proof(again) == check_proof(p));
}

TEST_CASE("rejections name the line and condition") {
  std::string swapped = kIdentity;
  swapped.replace(swapped.find("mp 4 3"), 6, "mp 3 4");
  ProofError e = rejection(proof(swapped));
  CHECK(e.kind == ErrorKind::MPMismatch);
  CHECK(e.label == 5);
  CHECK(std::string(e.what()).find("line 5") != std::string::npos);

  std::string forward = kIdentity;
  forward.replace(forward.find("mp 2 1"), 6, "mp 2 4");
  e = rejection(proof(forward));
  CHECK(e.kind == ErrorKind::ForwardReference);
  CHECK(e.label == 3);

  e = rejection(proof("1: not not P(a) -> P(a) by axiom dne;\n"));
  CHECK(e.kind == ErrorKind::SchemaMismatch);
  e = rejection(proof("1: P(a) -> Q -> Q by axiom k with F := P(a), G := Q;\n"));
  CHECK(e.kind == ErrorKind::SchemaMismatch);
}

TEST_CASE("side conditions") {
  // x is captured when t := y is substituted under exists y
  ProofError e = rejection(proof(
      "1: forall x exists y (P(x) -> P(y)) -> exists y (P(y) -> P(y)) by axiom all-e with x := x, "
      "F := exists y (P(x) -> P(y)), t := y;\n"));
  CHECK(e.kind == ErrorKind::SideConditionViolation);
  // generalization over a variable free in the antecedent
  e = rejection(proof(
      "1: P(x) -> P(x) | Q by axiom or-i1 with F := P(x), G := Q;\n"
      "2: P(x) -> forall x (P(x) | Q) by gen-all 1 x;\n"));
  CHECK(e.kind == ErrorKind::SideConditionViolation);
  // plain generalization of a theorem is fine
  Proof ok = proof(
      "1: P(x) -> P(x) | Q by axiom or-i1 with F := P(x), G := Q;\n"
      "2: forall x (P(x) -> P(x) | Q) by gen-all 1 x;\n");
  CHECK(check_proof(ok).to_string() == "forall x (P(x) -> P(x) | Q)");
}

TEST_CASE("levels") {
  CHECK(list_schemas(Level::HHT).size() == 19);
  CHECK(list_schemas(Level::HHT2).size() == 24);
  CHECK(list_schemas(Level::HHT2_DCA).size() == 25);
  CHECK(list_schemas(Level::HHT2_DCA).back().id == "dca");
  CHECK(parse_level("HHT2+DCA") == Level::HHT2_DCA);
  CHECK_FALSE(parse_level("HHT3").has_value());

  const std::string dca = "1: forall p/1 (p(a) & p(b) -> forall x p(x)) by axiom dca with p := p/1;\n";
  ProofError e = rejection(proof(dca));
  CHECK(e.kind == ErrorKind::LevelViolation);
  Proof at_dca = proof(dca, "const a, b.\npred P/1, Q/0.\nlevel HHT2+DCA;\n\n");
  CHECK_NOTHROW(check_proof(at_dca));
  CHECK_THROWS_AS(conclusion_for_pipeline(at_dca), ProofError);
  try {
    conclusion_for_pipeline(at_dca);
  } catch (const ProofError& err) {
    CHECK(err.kind == ErrorKind::ConclusionNotFirstOrder);
  }
  Proof open = proof("1: P(x) -> P(x) | Q by axiom or-i1 with F := P(x), G := Q;\n");
  try {
    conclusion_for_pipeline(open);
    FAIL("expected ConclusionNotClosed");
  } catch (const ProofError& err) {
    CHECK(err.kind == ErrorKind::ConclusionNotClosed);
  }
}

TEST_CASE("schema instantiation infers bindings") {
  Signature sig = parse_signature("const a. pred P/1, Q/0.");
  Bindings b;
  Formula target = parse_formula("P(a) | (P(a) -> Q) | not Q", sig);
  CHECK(instantiate_schema("hosoi", b, sig, target) == target);
  CHECK(binding_to_string(b.at("F")) == "P(a)");
  CHECK(binding_to_string(b.at("G")) == "Q");
  Bindings none;
  CHECK_THROWS_AS(instantiate_schema("nope", none, sig, target), ProofError);
}

TEST_CASE("checker determinism") {
  std::string bad = std::string(kIdentity) + "6: Q by mp 5 5;\n";
  ProofError a = rejection(proof(bad));
  ProofError b = rejection(proof(bad));
  CHECK(a.kind == b.kind);
  CHECK(a.label == b.label);
  CHECK(std::string(a.what()) == b.what());
}

TEST_CASE("proof builder emits kernel-checked proofs") {
  Signature sig = parse_signature("const a. pred P/1, Q/0.");
  ProofBuilder pb(sig, Level::HHT);
  Formula pa = parse_formula("P(a)", sig);
  Formula q = parse_formula("Q", sig);
  // P(a) & Q -> Q & P(a)
  auto h = pb.assume(Formula::conj(pa, q));
  auto swapped = pb.and_intro(pb.and_right(h), pb.and_left(h));
  CHECK(pb.depth() == 1);
  auto done = pb.discharge(swapped);
  CHECK(pb.depth() == 0);
  CHECK(pb.formula(done) == parse_formula("P(a) & Q -> Q & P(a)", sig));
  CHECK(check_proof(pb.proof()) == pb.formula(done));

  // forall x P(x) -> exists x P(x)
  ProofBuilder qb(sig, Level::HHT);
  Variable x = Variable::object("x");
  auto all = qb.assume(parse_formula("forall x P(x)", sig));
  auto inst = qb.all_elim(all, Term::constant("a"));
  auto ex = qb.ex_intro(parse_formula("P(x)", sig), x, Term::constant("a"), inst);
  auto thm = qb.discharge(ex);
  CHECK(qb.formula(thm) == parse_formula("forall x P(x) -> exists x P(x)", sig));
  CHECK(check_proof(qb.proof()) == qb.formula(thm));
}
