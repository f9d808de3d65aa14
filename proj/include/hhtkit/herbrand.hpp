#ifndef HHTKIT_HERBRAND_HPP
#define HHTKIT_HERBRAND_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/signature.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit::herbrand {

using ht::AtomState;
using ht::World;

constexpr std::uint64_t kDefaultBudget = 1000000;
// kDefaultBudget unless the HHTKIT_BUDGET environment variable holds a positive integer.
std::uint64_t default_budget();

// Pair <J^h, J^t> of sets of ground atoms with J^h a subset of J^t.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::set<GroundAtom> here, std::set<GroundAtom> there);

  const std::set<GroundAtom>& here() const { return here_; }
  const std::set<GroundAtom>& there() const { return there_; }
  const std::set<GroundAtom>& at(World w) const { return w == World::Here ? here_ : there_; }
  AtomState state(const GroundAtom& a) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::set<GroundAtom> here_;
  std::set<GroundAtom> there_;
};

// Function name: a total table U^n -> U. Argument tuples are indexed
// mixed-radix over universe positions, first argument most significant;
// entries are universe positions.
struct FunctionName {
  int arity = 1;
  std::vector<int> table;
};

// Predicate name (p_h, p_t): one state per tuple of U^n, so p_h is a subset of p_t by construction.
struct PredicateName {
  int arity = 0;
  std::vector<AtomState> extension;
  bool holds(World w, std::size_t tuple) const {
    return extension[tuple] == AtomState::Both || (w == World::There && extension[tuple] == AtomState::ThereOnly);
  }
};

// Interpretations of the free second-order variables of a formula over the
// extended signature: each such variable stands for a name.
struct Names {
  std::map<std::string, FunctionName> functions;
  std::map<std::string, PredicateName> predicates;
};

// Herbrand universe plus evaluation of closed formulas over it. Exact mode
// needs a nullary-only signature; bounded mode truncates the universe to
// terms of the given depth (approximate: atoms whose arguments fall outside
// the truncated universe are false at both worlds).
class Evaluator {
 public:
  explicit Evaluator(Signature sig, InstantiationMode mode = InstantiationMode::exact());

  const Signature& signature() const { return sig_; }
  InstantiationMode mode() const { return mode_; }
  const std::vector<Term>& universe() const { return universe_; }

  // Ground atoms over the universe for the given predicates (all predicates when empty), sorted by rendering.
  std::vector<GroundAtom> herbrand_base(const std::vector<std::string>& predicates = {}) const;
  // Predicate constants occurring in f, including restrictors of generalized variables.
  static std::vector<std::string> predicates_of(const Formula& f);

  // alpha-hat: collapses a ground term over the extended signature to a universe term.
  Term hat_eval(const Term& t, const Names& names = {}) const;

  // J,w |= F for F closed modulo the names; throws BudgetExceeded when the
  // estimated evaluation count exceeds budget.
  bool satisfies(const Interpretation& j, World w, const Formula& f, const Names& names = {},
                 std::uint64_t budget = default_budget()) const;

  // Estimated number of atomic evaluations for one pass over f.
  std::uint64_t cost(const Formula& f) const;

 private:
  friend class Evaluation;
  Signature sig_;
  InstantiationMode mode_;
  std::vector<Term> universe_;
  std::unordered_map<std::string, std::size_t> index_;  // rendering -> position
};

struct ValidityResult {
  bool valid = true;
  bool approximate = false;
  std::vector<GroundAtom> base;
  std::optional<Interpretation> countermodel;
  std::uint64_t index = 0;
  std::uint64_t estimated_cost = 0;
};

// Enumerates all Herbrand HT-interpretations over the atoms of the Herbrand
// base built from the predicates occurring in F, in the canonical order of
// ht::ht_valid; returns the first one whose h-world does not satisfy F.
// Atoms of other predicates cannot affect F, so the first failure is the same
// as with the full base.
ValidityResult hht_valid_bruteforce(const Signature& sig, const Formula& f, std::uint64_t budget = default_budget(),
                                    InstantiationMode mode = InstantiationMode::exact());

// J^w = { a : I,w |= psi a } over the full Herbrand base.
Interpretation lift(const Substitution& psi, const ht::Interpretation& i);

// Whether J,w |= F and I,w |= psi F agree at both worlds, with J = lift(psi, i).
bool lifting_check(const Substitution& psi, const ht::Interpretation& i, const Formula& f);

// One line per atom of `base`: `P(a,b): both | there-only | absent`, lexicographic.
std::string render(const Interpretation& j, const std::vector<GroundAtom>& base);
std::string compact(const GroundAtom& a);

}  // namespace hhtkit::herbrand

#endif  // HHTKIT_HERBRAND_HPP
