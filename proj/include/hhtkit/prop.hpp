#ifndef HHTKIT_PROP_HPP
#define HHTKIT_PROP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hhtkit {

// Finitely represented infinitary propositional formula. Conjunctions and
// disjunctions are sets: children are sorted and duplicate-free, so two
// formulas built from the same sets compare equal regardless of input order.
// top is the empty conjunction, bot the empty disjunction.
class PropFormula {
 public:
  enum class Kind : std::uint8_t { Atom, And, Or, Implies };

  static PropFormula atom(std::string name);
  static PropFormula conj(std::vector<PropFormula> children);
  static PropFormula disj(std::vector<PropFormula> children);
  static PropFormula implies(PropFormula lhs, PropFormula rhs);
  static PropFormula top() { return conj({}); }
  static PropFormula bot() { return disj({}); }
  static PropFormula neg(PropFormula f) { return implies(std::move(f), bot()); }
  static PropFormula iff(const PropFormula& a, const PropFormula& b) {
    return conj({implies(a, b), implies(b, a)});
  }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  std::span<const PropFormula> children() const { return node_->children; }
  const PropFormula& lhs() const { return node_->children[0]; }
  const PropFormula& rhs() const { return node_->children[1]; }

  bool is_top() const { return kind() == Kind::And && node_->children.empty(); }
  bool is_bot() const { return kind() == Kind::Or && node_->children.empty(); }

  // 0 for atoms; otherwise the least integer above every child's rank.
  int rank() const { return node_->rank; }
  // Number of nodes in the tree (shared subformulas counted at each use), saturating.
  std::uint64_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }
  // Atoms occurring in the formula, sorted lexicographically.
  std::vector<std::string> atoms() const;

  std::string to_string() const;

  // Identity of the shared node; used for memoization over DAG-shared instances.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const PropFormula& a, const PropFormula& b);
  friend std::strong_ordering operator<=>(const PropFormula& a, const PropFormula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<PropFormula> children;
    int rank = 0;
    std::uint64_t size = 1;
    std::size_t hash = 0;
  };
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PropFormula make_set(Kind k, std::vector<PropFormula> children);

  std::shared_ptr<const Node> node_;
};

inline int rank(const PropFormula& f) { return f.rank(); }

}  // namespace hhtkit

#endif  // HHTKIT_PROP_HPP
