#ifndef HHTKIT_HT_HPP
#define HHTKIT_HT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hhtkit/prop.hpp"

namespace hhtkit::ht {

// h < t
enum class World { Here, There };

enum class AtomState { Absent, ThereOnly, Both };

const char* state_name(AtomState s);

class Interpretation {
 public:
  Interpretation() = default;
  // Throws std::invalid_argument unless here is a subset of there.
  Interpretation(std::set<std::string> here, std::set<std::string> there);

  const std::set<std::string>& here() const { return here_; }
  const std::set<std::string>& there() const { return there_; }
  const std::set<std::string>& at(World w) const { return w == World::Here ? here_ : there_; }
  AtomState state(const std::string& atom) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::set<std::string> here_;
  std::set<std::string> there_;
};

// I,w |= F, following the recursive clauses directly; the implication clause
// ranges over all worlds w' >= w.
bool satisfies(const Interpretation& i, World w, const PropFormula& f);
// I,h |= F
bool models(const Interpretation& i, const PropFormula& f);
// Three-valued (Goedel) evaluation: 2 here, 1 there only, 0 neither.
int g3_eval(const Interpretation& i, const PropFormula& f);
// Truth-table evaluation under a total assignment.
bool classical_eval(const std::set<std::string>& true_atoms, const PropFormula& f);

struct ValidityOptions {
  std::size_t max_atoms = 20;
  unsigned threads = 1;
};

struct ValidityResult {
  bool valid = true;
  // Atoms of the formula, sorted; the enumeration ranges over their 3^n states.
  std::vector<std::string> atoms;
  std::optional<Interpretation> countermodel;
  // Position of the countermodel in the canonical enumeration.
  std::uint64_t index = 0;
  std::uint64_t interpretations_checked = 0;
};

// Canonical order: atoms sorted lexicographically, each atom cycling through
// absent < there-only < both, mixed-radix with the last atom least significant.
// Throws BudgetExceeded when the formula has more than max_atoms atoms.
ValidityResult ht_valid(const PropFormula& f, const ValidityOptions& options = {});

// Interpretation number `index` of the canonical enumeration over `atoms`.
Interpretation interpretation_at(const std::vector<std::string>& atoms, std::uint64_t index);

// One line per atom: `p: both | there-only | absent`.
std::string render(const Interpretation& i, const std::vector<std::string>& atoms);

}  // namespace hhtkit::ht

#endif  // HHTKIT_HT_HPP
