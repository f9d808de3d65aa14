// Writes the shipped corpus: proofs of the corpus cases built with the
// ProofBuilder, substitution files for several index-set sizes, and small
// propositional and first-order inputs.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "hhtkit/builder.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/transform.hpp"

namespace fs = std::filesystem;
using namespace hhtkit;
using namespace hhtkit::kernel;
using Fact = ProofBuilder::Fact;

namespace {

fs::path out_dir;

void write(const std::string& name, const std::string& text) {
  std::ofstream out(out_dir / name);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + name);
}

struct Case {
  ProofBuilder b;
  Signature sig;
  Case(const std::string& sig_text, Level level) : b(parse_signature(sig_text), level), sig(parse_signature(sig_text)) {}
  Formula f(const std::string& text) const { return parse_formula(text, sig); }
  Term t(const std::string& text) const { return parse_term(text, sig); }
};

const Variable x = Variable::object("x");
const Variable y = Variable::object("y");

void finish(Case& c, const std::string& name, const std::string& header, const std::optional<Formula>& display = {}) {
  if (display) c.b.restate_conclusion(*display);
  const Proof& p = c.b.proof();
  check_proof(p);
  write(name, "# " + header + "\n" + p.to_string());
  std::cout << name << ": " << p.lines.size() << " lines\n";
}

// forall x not P(x) <-> not exists x P(x)
void example1_forall() {
  Case c("const a. pred P/1.", Level::HHT);
  auto& b = c.b;
  Fact all = b.assume(c.f("forall x not P(x)"));
  Fact ex = b.assume(c.f("exists x P(x)"));
  Fact bot = b.ex_elim(ex, b.all_elim(all, c.t("x")));
  Fact lr = b.discharge(b.discharge(bot));

  Fact n = b.assume(c.f("not exists x P(x)"));
  Fact px = b.assume(c.f("P(x)"));
  Fact e = b.ex_intro(c.f("P(x)"), x, c.t("x"), px);
  Fact np = b.discharge(b.mp(e, n));
  Fact rl = b.discharge(b.gen_all(np, x));
  b.iff_intro(lr, rl);
  finish(c, "example1_forall.proof", "De Morgan: forall x not P(x) <-> not exists x P(x)");
}

// exists x not P(x) <-> not forall x P(x); right to left uses sqht with P(x) as F
void example1_exists() {
  Case c("const a. pred P/1.", Level::HHT);
  auto& b = c.b;
  Fact ex = b.assume(c.f("exists x not P(x)"));
  Fact all = b.assume(c.f("forall x P(x)"));
  Fact np = b.assume(c.f("not P(x)"));
  Fact bot = b.mp(b.all_elim(all, c.t("x")), np);
  Fact imp = b.discharge(bot);
  Fact lr = b.discharge(b.discharge(b.ex_elim(ex, imp)));

  Fact n = b.assume(c.f("not forall x P(x)"));
  Fact sq = b.axiom("sqht", {{"x", x}, {"F", c.f("P(x)")}});
  Fact i = b.assume(c.f("P(x) -> forall x P(x)"));
  Fact p = b.assume(c.f("P(x)"));
  Fact nx = b.discharge(b.mp(b.mp(p, i), n));
  Fact w = b.ex_intro(c.f("not P(x)"), x, c.t("x"), nx);
  Fact found = b.ex_elim(sq, b.discharge(w));
  Fact rl = b.discharge(found);
  b.iff_intro(lr, rl);
  finish(c, "example1_exists.proof", "De Morgan: exists x not P(x) <-> not forall x P(x)");
}

// exists x P(x) & Q <-> exists x (P(x) & Q)
void subsum4() {
  Case c("const a. pred P/1, Q/0.", Level::HHT);
  auto& b = c.b;
  const Formula rhs = c.f("exists x (P(x) & Q)");
  Fact l = b.assume(c.f("exists x P(x) & Q"));
  Fact q = b.and_right(l);
  Fact px = b.assume(c.f("P(x)"));
  Fact w = b.ex_intro(c.f("P(x) & Q"), x, c.t("x"), b.and_intro(px, q));
  Fact lr = b.discharge(b.ex_elim(b.and_left(l), b.discharge(w)));

  Fact r = b.assume(rhs);
  Fact h = b.assume(c.f("P(x) & Q"));
  Fact e = b.ex_intro(c.f("P(x)"), x, c.t("x"), b.and_left(h));
  Fact both = b.and_intro(e, b.and_right(h));
  Fact rl = b.discharge(b.ex_elim(r, b.discharge(both)));
  b.iff_intro(lr, rl);
  finish(c, "subsum4.proof", "distribution: exists x P(x) & Q <-> exists x (P(x) & Q)");
}

// forall x P(x) | Q <-> forall x (P(x) | Q)
void example2() {
  Case c("const a. pred P/1, Q/0.", Level::HHT);
  auto& b = c.b;
  const Formula lhs = c.f("forall x P(x) | Q");
  Fact d = b.assume(lhs);
  Fact a = b.assume(c.f("forall x P(x)"));
  Fact ca = b.discharge(b.gen_all(b.or_left(b.all_elim(a, c.t("x")), c.f("Q")), x));
  Fact q = b.assume(c.f("Q"));
  Fact cq = b.discharge(b.gen_all(b.or_right(c.f("P(x)"), q), x));
  Fact lr = b.discharge(b.or_elim(d, ca, cq));

  Fact u = b.assume(c.f("forall x (P(x) | Q)"));
  Fact sq = b.axiom("sqht", {{"x", x}, {"F", c.f("P(x)")}});
  Fact i = b.assume(c.f("P(x) -> forall x P(x)"));
  Fact px = b.assume(c.f("P(x)"));
  Fact c1 = b.discharge(b.or_left(b.mp(px, i), c.f("Q")));
  Fact q2 = b.assume(c.f("Q"));
  Fact c2 = b.discharge(b.or_right(c.f("forall x P(x)"), q2));
  Fact got = b.or_elim(b.all_elim(u, c.t("x")), c1, c2);
  Fact rl = b.discharge(b.ex_elim(sq, b.discharge(got)));
  b.iff_intro(lr, rl);
  finish(c, "example2.proof", "dual distribution: forall x P(x) | Q <-> forall x (P(x) | Q)");
}

// (exists x P(x) -> Q) <-> forall x (P(x) -> Q)
void example3() {
  Case c("const a. pred P/1, Q/0.", Level::HHT);
  auto& b = c.b;
  Fact i = b.assume(c.f("exists x P(x) -> Q"));
  Fact px = b.assume(c.f("P(x)"));
  Fact q = b.mp(b.ex_intro(c.f("P(x)"), x, c.t("x"), px), i);
  Fact lr = b.discharge(b.gen_all(b.discharge(q), x));

  Fact u = b.assume(c.f("forall x (P(x) -> Q)"));
  Fact e = b.assume(c.f("exists x P(x)"));
  Fact got = b.ex_elim(e, b.all_elim(u, c.t("x")));
  Fact rl = b.discharge(b.discharge(got));
  b.iff_intro(lr, rl);
  finish(c, "example3.proof", "(exists x P(x) -> Q) <-> forall x (P(x) -> Q)");
}

void example4() {
  Case c("const a. pred P/1.", Level::HHT);
  c.b.axiom("sqht", {{"x", x}, {"F", c.f("P(x)")}});
  finish(c, "example4.proof", "instance of the schema exists x (F -> forall x F)");
}

// forall x P(x) -> forall (x:R) P(x)
void example5() {
  Case c("const a. pred P/1. restrictor R.", Level::HHT);
  auto& b = c.b;
  Fact a = b.assume(c.f("forall x P(x)"));
  b.assume(c.f("R(x)"));
  Fact p = b.all_elim(a, c.t("x"));
  b.discharge(b.gen_all(b.discharge(p), x));
  finish(c, "example5.proof", "restrictor subset: forall x P(x) -> forall (x:R) P(x)",
         c.f("forall x P(x) -> forall (x:R) P(x)"));
}

// exists (x:R1) P(x) & exists (y:R2) Q(y) <-> exists (x:R1, y:R2) (P(x) & Q(y))
void example6() {
  Case c("const a. pred P/1, Q/1. restrictor R1, R2.", Level::HHT);
  auto& b = c.b;
  const Formula display = c.f("exists (x:R1) P(x) & exists (y:R2) Q(y) <-> exists (x:R1, y:R2) (P(x) & Q(y))");
  const Formula plain = eliminate_restrictors(display);
  const Formula lhs = plain.lhs().lhs();
  const Formula rhs = plain.lhs().rhs();
  const Formula gxy = rhs.body().body();  // R1(x) & R2(y) & (P(x) & Q(y))

  Fact l = b.assume(lhs);
  Fact h1 = b.assume(lhs.lhs().body());
  Fact h2 = b.assume(lhs.rhs().body());
  Fact guards = b.and_intro(b.and_left(h1), b.and_left(h2));
  Fact g = b.and_intro(guards, b.and_intro(b.and_right(h1), b.and_right(h2)));
  Fact ey = b.ex_intro(gxy, y, c.t("y"), g);
  Fact exy = b.ex_intro(rhs.body(), x, c.t("x"), ey);
  Fact inner = b.ex_elim(b.and_right(l), b.discharge(exy));
  Fact outer = b.ex_elim(b.and_left(l), b.discharge(inner));
  Fact lr = b.discharge(outer);

  Fact r = b.assume(rhs);
  Fact ey2 = b.assume(rhs.body());
  Fact gg = b.assume(gxy);
  Fact gd = b.and_left(gg), pq = b.and_right(gg);
  Fact px = b.ex_intro(lhs.lhs().body(), x, c.t("x"), b.and_intro(b.and_left(gd), b.and_left(pq)));
  Fact qy = b.ex_intro(lhs.rhs().body(), y, c.t("y"), b.and_intro(b.and_right(gd), b.and_right(pq)));
  Fact both = b.and_intro(px, qy);
  Fact fromy = b.ex_elim(ey2, b.discharge(both));
  Fact rl = b.discharge(b.ex_elim(r, b.discharge(fromy)));
  b.iff_intro(lr, rl);
  finish(c, "example6.proof", "product of disjunctions over restricted index sets", display);
}

// forall x P(x) -> forall x P(f(x)), for bounded instantiation
void example5_alt() {
  Case c("const a. fn f/1. pred P/1.", Level::HHT);
  auto& b = c.b;
  Fact a = b.assume(c.f("forall x P(x)"));
  b.discharge(b.gen_all(b.all_elim(a, c.t("f(x)")), x));
  finish(c, "example5_alt.proof", "restrictor-free encoding: forall x P(x) -> forall x P(f(x))");
}

// P(a) & forall x (P(x) -> P(s(x))) <-> forall x P(x), using the induction axiom
void example7() {
  Case c("const a. fn s/1. pred P/1.", Level::HHT2_DCA);
  auto& b = c.b;
  const Variable p = Variable::predicate("p", 1);
  Fact dca = b.axiom("dca", {{"p", p}});
  Fact lr = b.so_all_elim(dca, Abstraction{{x}, c.f("P(x)")});

  Fact a = b.assume(c.f("forall x P(x)"));
  Fact base = b.all_elim(a, c.t("a"));
  b.assume(c.f("P(x)"));
  Fact step = b.discharge(b.all_elim(a, c.t("s(x)")));
  Fact rl = b.discharge(b.and_intro(base, b.gen_all(step, x)));
  b.iff_intro(lr, rl);
  finish(c, "example7.proof", "induction: P(a) & forall x (P(x) -> P(s(x))) <-> forall x P(x)");
}

// The non-uniform conjunction (bad) split into two uniform conjunctions.
void bad_rewritten() {
  Case c("const a. pred P/1. restrictor Odd, Even.", Level::HHT);
  auto& b = c.b;
  const Formula px = c.f("P(x)");
  const Formula npx = c.f("not P(x)");
  // hosoi with not P(x) for F and P(x) for G: not P | (not P -> P) | not P
  Fact h = b.axiom("hosoi", {{"F", npx}, {"G", px}});
  const Formula goal = c.f("(not not P(x) | not P(x))");
  Fact n1 = b.assume(npx);
  Fact c1 = b.discharge(b.or_right(c.f("not not P(x)"), n1));
  Fact i = b.assume(c.f("not P(x) -> P(x)"));
  Fact n2 = b.assume(npx);
  Fact nn = b.discharge(b.mp(b.mp(n2, i), n2));
  Fact c2 = b.discharge(b.or_left(nn, npx));
  Fact inner = b.assume(c.f("not P(x) | (not P(x) -> P(x))"));
  Fact ci = b.discharge(b.or_elim(inner, c1, c2));
  Fact wem = b.or_elim(h, ci, c1);

  b.assume(c.f("Odd(x)"));
  Fact odd = b.gen_all(b.discharge(wem), x);
  b.assume(c.f("Even(x)"));
  Fact same = b.discharge(b.assume(px));
  Fact even = b.gen_all(b.discharge(same), x);
  b.and_intro(odd, even);
  finish(c, "bad_rewritten.proof", "(bad) rewritten as a conjunction of two uniform conjunctions",
         c.f("forall (x:Odd) (" + goal.to_string() + ") & forall (x:Even) (P(x) -> P(x))"));
}

std::string constants(const std::string& base, int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) out += (i > 1 ? ", " : "") + base + std::to_string(i);
  return out;
}

std::string iterate(const std::string& fn, int times, const std::string& arg) {
  std::string t = arg;
  for (int i = 0; i < times; ++i) t = fn + "(" + t + ")";
  return t;
}

void substitutions() {
  // P(a_i) := f_i over A = {a1..an}; Q := g where Q is declared.
  for (int n = 1; n <= 4; ++n) {
    const std::string head = "const " + constants("a", n) + ".\n";
    std::string p_entries;
    for (int i = 1; i <= n; ++i) p_entries += "P(a" + std::to_string(i) + ") := f" + std::to_string(i) + ";\n";
    const std::string only_p = head + "pred P/1.\n\n" + p_entries;
    const std::string with_q = head + "pred P/1, Q/0.\n\n" + p_entries + "Q := g;\n";
    const std::string a = "_A" + std::to_string(n) + ".subst";
    write("example1_forall" + a, only_p);
    write("example1_exists" + a, only_p);
    write("example4" + a, only_p);
    write("subsum4" + a, with_q);
    write("example2" + a, with_q);
    write("example3" + a, with_q);

    // example5: R holds exactly on B = {a1..am}.
    for (int m = 1; m <= n; ++m) {
      std::string t = head + "pred P/1.\nrestrictor R.\n\n" + p_entries;
      for (int i = 1; i <= n; ++i) t += "R(a" + std::to_string(i) + ") := " + (i <= m ? "top" : "bot") + ";\n";
      write("example5_A" + std::to_string(n) + "_B" + std::to_string(m) + ".subst", t);
    }
    // example6: A = {a1..an}, B = {b1..bm}.
    for (int m = 1; m <= 4; ++m) {
      std::string t = "const " + constants("a", n) + ", " + constants("b", m) +
                      ".\npred P/1, Q/1.\nrestrictor R1, R2.\n\ndefault P := bot;\ndefault Q := bot;\n";
      for (int i = 1; i <= n; ++i) {
        const std::string ai = "a" + std::to_string(i);
        t += "P(" + ai + ") := f" + std::to_string(i) + ";\nR1(" + ai + ") := top;\nR2(" + ai + ") := bot;\n";
      }
      for (int j = 1; j <= m; ++j) {
        const std::string bj = "b" + std::to_string(j);
        t += "Q(" + bj + ") := g" + std::to_string(j) + ";\nR1(" + bj + ") := bot;\nR2(" + bj + ") := top;\n";
      }
      write("example6_A" + std::to_string(n) + "_B" + std::to_string(m) + ".subst", t);
    }
  }

  // example5_alt: A = {a1, a2, a3}, B = {a1, a2}, alpha0 = a1;
  // entries up to depth 3 so that bounded depth 2 is covered.
  {
    std::string t = "const a1, a2, a3.\nfn f/1.\npred P/1.\n\n";
    for (int i = 1; i <= 3; ++i)
      for (int k = 0; k <= 3; ++k) {
        const std::string img = k == 0 || i <= 2 ? "f" + std::to_string(i) : "f1";
        t += "P(" + iterate("f", k, "a" + std::to_string(i)) + ") := " + img + ";\n";
      }
    write("example5_alt_A3_B2.subst", t);
  }

  // example7: P(s^i(a)) := F_i. Depth 3 quantifies over s^0..s^3(a); the
  // successor atom P(s^4(a)) appears in the instance too.
  {
    std::string t = "const a.\nfn s/1.\npred P/1.\n\n";
    for (int i = 0; i <= 4; ++i) t += "P(" + iterate("s", i, "a") + ") := f" + std::to_string(i) + ";\n";
    write("example7_D3.subst", t);
  }

  // (bad) rewritten: odd positions carry the weak excluded middle conjuncts.
  for (int n : {2, 4}) {
    std::string t = "const " + constants("a", n) + ".\npred P/1.\nrestrictor Odd, Even.\n\n";
    for (int i = 1; i <= n; ++i) {
      const std::string ai = "a" + std::to_string(i);
      t += "P(" + ai + ") := f" + std::to_string(i) + ";\nOdd(" + ai + ") := " + (i % 2 ? "top" : "bot") +
           ";\nEven(" + ai + ") := " + (i % 2 ? "bot" : "top") + ";\n";
    }
    write("bad_rewritten_A" + std::to_string(n) + ".subst", t);
  }
}

void inputs() {
  write("lem.prop", "# excluded middle\np | not p\n");
  write("dne.prop", "# double negation elimination\nnot not p -> p\n");
  write("wem.prop", "# weak excluded middle\nnot p | not not p\n");
  write("hosoi.prop", "p | (p -> q) | not q\n");
  write("sqht_A2.prop", "# propositional instance of exists x (P(x) -> forall x P(x)) over two constants\n"
                        "Or{p1 -> And{p1; p2}; p2 -> And{p1; p2}}\n");
  write("top_not_bot.prop", "# instance of the De Morgan law for an empty index set\ntop <-> not bot\n");
  write("bad.prop", "# the non-uniform conjunction (bad) for four conjuncts\n"
                    "And{not not f1 | not f1; f2 -> f2; not not f3 | not f3; f4 -> f4}\n");

  write("example1_forall.fof", "const a1, a2, a3.\npred P/1.\n\nforall x not P(x) <-> not exists x P(x)\n");
  write("r0.fof", "const a.\npred P/1.\nrestrictor R.\n\nforall x P(x) -> forall (x:R) P(x)\n");
  write("r1.fof", "const a.\npred P/1, Q/1.\nrestrictor R1, R2.\n\n"
                  "exists (x:R1) P(x) & exists (y:R2) Q(y) <-> exists (x:R1, y:R2) (P(x) & Q(y))\n");
  write("lem.fof", "const a.\npred P/1.\n\nP(a) | not P(a)\n");
  write("hosoi.fof", "const a, b.\npred P/1, Q/0.\n\nforall x (P(x) | (P(x) -> Q) | not Q)\n");
  write("dca_ab.fof", "# domain closure over {a, b}\nconst a, b.\n\nforall p/1 (p(a) & p(b) -> forall x p(x))\n");
  write("comprehension.fof", "const a.\npred P/1.\n\nexists p/1 forall x (p(x) <-> P(x))\n");
  write("classical.proof", "# double negation elimination claimed as an axiom; not a schema of HHT\n"
                           "const a.\npred P/1.\nlevel HHT;\n\n"
                           "1: not not P(a) -> P(a)\n    by axiom dne;\n");
}

}  // namespace

int main(int argc, char** argv) {
  out_dir = argc > 1 ? fs::path(argv[1]) : fs::path("corpus");
  fs::create_directories(out_dir);
  try {
    example1_forall();
    example1_exists();
    subsum4();
    example2();
    example3();
    example4();
    example5();
    example6();
    example5_alt();
    example7();
    bad_rewritten();
    substitutions();
    inputs();
  } catch (const std::exception& e) {
    std::cerr << "gen_corpus: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
