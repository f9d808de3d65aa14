#ifndef HHTKIT_INSTANTIATE_HPP
#define HHTKIT_INSTANTIATE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhtkit/error.hpp"
#include "hhtkit/prop.hpp"
#include "hhtkit/signature.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit {

// Closed atomic formula P(t1, ..., tn) without equality.
struct GroundAtom {
  std::string predicate;
  std::vector<Term> args;

  std::string to_string() const;
  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend std::strong_ordering operator<=>(const GroundAtom& a, const GroundAtom& b);
};

struct InstantiationError : Error {
  enum class Kind { NotClosed, NotFirstOrder, UnmappedAtom, InfiniteUniverse };
  InstantiationError(Kind k, const std::string& message) : Error(message), kind(k) {}
  Kind kind;
};

const char* kind_name(InstantiationError::Kind k);

class InstantiationMode {
 public:
  static InstantiationMode exact() { return InstantiationMode(-1); }
  // Ground terms of depth <= d; not validity-preserving.
  static InstantiationMode bounded(int depth);

  bool is_exact() const { return depth_ < 0; }
  int depth() const { return depth_; }
  std::string to_string() const;

  friend bool operator==(const InstantiationMode&, const InstantiationMode&) = default;

 private:
  explicit InstantiationMode(int d) : depth_(d) {}
  int depth_;
};

// Ground terms quantifiers range over. Exact: the object constants (requires a
// nullary-only signature). Bounded(d): all ground terms of depth <= d, by depth
// then declaration order then argument order. Throws BudgetExceeded above
// max_terms terms.
std::vector<Term> herbrand_universe(const Signature& sig, InstantiationMode mode, std::uint64_t max_terms = 1000000);

// Map psi from closed atoms to propositional formulas, total via per-predicate
// defaults. Restrictor atoms map to top or bot only.
class Substitution {
 public:
  explicit Substitution(Signature sig);

  const Signature& signature() const { return sig_; }

  // Throws SignatureError for undeclared predicates, arity mismatches,
  // non-ground arguments, or non-top/bot restrictor images.
  void set(GroundAtom atom, PropFormula value);
  void set_default(const std::string& predicate, PropFormula value);

  std::optional<PropFormula> find(const GroundAtom& atom) const;
  // Throws InstantiationError(UnmappedAtom) naming the atom.
  PropFormula lookup(const GroundAtom& atom) const;

  const std::map<GroundAtom, PropFormula>& entries() const { return entries_; }
  const std::map<std::string, PropFormula>& defaults() const { return defaults_; }

  // Renders in the substitution file format.
  std::string to_string() const;

 private:
  void check_value(const std::string& predicate, const PropFormula& value) const;

  Signature sig_;
  std::map<GroundAtom, PropFormula> entries_;
  std::map<std::string, PropFormula> defaults_;
};

// psi F. F must be closed and first-order (restrictors allowed).
PropFormula instantiate(const Substitution& psi, const Formula& f, InstantiationMode mode);

// Every closed atom reachable while instantiating F that psi does not map,
// sorted and duplicate-free. Missing restrictor atoms count as bot while
// exploring.
std::vector<GroundAtom> validate(const Substitution& psi, const Formula& f, InstantiationMode mode);

// Signature block, then `P(a, b) := <prop>;` and `default P := <prop>;` lines.
Substitution parse_substitution(std::string_view text);

}  // namespace hhtkit

#endif  // HHTKIT_INSTANTIATE_HPP
