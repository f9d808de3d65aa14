#ifndef HHTKIT_BUILDER_HPP
#define HHTKIT_BUILDER_HPP

#include <span>
#include <vector>

#include "hhtkit/kernel.hpp"

namespace hhtkit::kernel {

// Emits Hilbert proofs line by line. Hypotheses may be opened with assume()
// and closed with discharge(); inside k open hypotheses H1..Hk a fact F is a
// proof line H1 -> (... -> (Hk -> F)), so every emitted line is a theorem and
// the kernel never sees an open premise. Every axiom line carries its full
// bindings.
class ProofBuilder {
 public:
  struct Fact {
    int label = 0;
    std::size_t depth = 0;
  };

  ProofBuilder(Signature sig, Level level);

  Fact axiom(const std::string& id, Bindings bindings);
  Fact assume(const Formula& h);
  Fact discharge(Fact f);  // H -> F, one level down
  Fact mp(Fact minor, Fact major);
  Fact gen_all(Fact f, const Variable& x);  // F gives forall x F
  Fact gen_ex(Fact f, const Variable& x);   // F -> G gives exists x F -> G

  // Derived steps.
  Fact and_intro(Fact a, Fact b);
  Fact and_left(Fact f);
  Fact and_right(Fact f);
  Fact or_left(Fact a, const Formula& b);   // A gives A | B
  Fact or_right(const Formula& a, Fact b);  // B gives A | B
  Fact or_elim(Fact ab, Fact ac, Fact bc);  // A | B, A -> C, B -> C gives C
  Fact efq(Fact bot, const Formula& f);
  Fact iff_intro(Fact ab, Fact ba);
  Fact all_elim(Fact all, const Term& t);
  Fact ex_intro(const Formula& body, const Variable& x, const Term& t, Fact inst);
  Fact ex_elim(Fact ex, Fact imp);  // exists x F and F -> G (x not free in G) give G
  Fact so_all_elim(Fact all, const Abstraction& l);

  Formula formula(Fact f) const;
  std::size_t depth() const { return stack_.size(); }
  const Proof& proof() const { return proof_; }

  // Replaces the last line's formula by `display`, which must have the same
  // restrictor elimination (used to state conclusions with restrictors).
  void restate_conclusion(const Formula& display);

 private:
  using Ctx = std::span<const Formula>;

  int emit(Formula f, Justification j);
  int lift_theorem(Ctx ctx, int label);
  int weaken(Ctx ctx, int label, std::size_t from);
  int ax(Ctx ctx, const std::string& id, Bindings b);
  int mp_in(Ctx ctx, int minor, int major);
  int identity(Ctx ctx, const Formula& a);
  int gen_in(Ctx ctx, int label, const Variable& x);
  int gen_bernays(Ctx ctx, int label, const Variable& x);
  int gen_ex_in(Ctx ctx, int label, const Variable& x);
  int uncurry(Ctx ctx, int label);  // A -> (B -> C) gives A & B -> C
  int curry(Ctx ctx, int label);    // A & B -> C gives A -> (B -> C)
  int swap(Ctx ctx, int label);     // A -> (B -> C) gives B -> (A -> C)
  Formula strip(Ctx ctx, int label) const;
  Fact here(Fact f);

  Proof proof_;
  std::vector<Formula> stack_;
  std::map<std::string, int> axioms_;  // first-level axiom lines by formula text
};

}  // namespace hhtkit::kernel

#endif  // HHTKIT_BUILDER_HPP
