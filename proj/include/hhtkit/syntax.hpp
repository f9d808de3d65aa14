#ifndef HHTKIT_SYNTAX_HPP
#define HHTKIT_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hhtkit {

class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Function, FunctionVariable };

  static Term variable(std::string name);
  static Term constant(std::string name) { return function(std::move(name), {}); }
  static Term function(std::string name, std::vector<Term> args);
  static Term function_variable(std::string name, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  int arity() const { return static_cast<int>(args_.size()); }

  bool is_variable() const { return kind_ == Kind::Variable; }
  // No object variables and no function variables.
  bool is_ground() const;
  bool has_function_variables() const;
  // Constants and variables have depth 0.
  int depth() const;
  bool contains(const Term& sub) const;

  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(Kind k, std::string name, std::vector<Term> args)
      : kind_(k), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

enum class VarSort : std::uint8_t { Object, Predicate, Function };

struct Variable {
  VarSort sort = VarSort::Object;
  std::string name;
  int arity = 0;

  static Variable object(std::string name) { return {VarSort::Object, std::move(name), 0}; }
  static Variable predicate(std::string name, int arity) { return {VarSort::Predicate, std::move(name), arity}; }
  static Variable function(std::string name, int arity) { return {VarSort::Function, std::move(name), arity}; }

  bool second_order() const { return sort != VarSort::Object; }
  // x, p/1, f^2
  std::string to_string() const;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct Binder {
  Variable var;
  // Non-empty only inside a generalized variable (x1:R1, ..., xn:Rn).
  std::string restrictor;

  friend auto operator<=>(const Binder&, const Binder&) = default;
};

// Immutable first- or second-order formula with structural equality. The
// connectives are those treated as primitive by the logic (bot, =, atoms,
// and, or, implies, quantifiers); top, negation, != and <-> are built as the
// usual abbreviations.
class Formula {
 public:
  enum class Kind : std::uint8_t { Bot, Equal, Atom, And, Or, Implies, Forall, Exists };

  static Formula bot();
  static Formula equal(Term lhs, Term rhs);
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula predicate_variable_atom(std::string variable, std::vector<Term> args = {});
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  // k is And, Or or Implies.
  static Formula binary(Kind k, Formula a, Formula b);
  // One plain binder, or a generalized variable where every binder has a restrictor.
  static Formula quantifier(Kind q, std::vector<Binder> binders, Formula body);
  static Formula forall(Variable v, Formula body);
  static Formula exists(Variable v, Formula body);

  // bot -> bot
  static Formula top();
  static Formula neg(Formula f);
  static Formula iff(Formula a, Formula b);
  static Formula not_equal(Term lhs, Term rhs);
  // Left-associated conjunction; a single element is returned unchanged.
  static Formula conj_all(const std::vector<Formula>& parts);

  Kind kind() const;
  bool is_binary() const;
  bool is_quantifier() const;

  // Equal: lhs/rhs terms; Atom: predicate name, args and whether it is a variable.
  const Term& left_term() const;
  const Term& right_term() const;
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  bool is_predicate_variable() const;
  Variable predicate_variable() const;

  // Binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Quantifiers.
  const std::vector<Binder>& binders() const;
  const Formula& body() const;
  bool is_generalized() const;
  // The single bound variable of a plain quantifier.
  const Variable& bound() const;

  // Sugar recognizers used by the printer and by schema matching.
  bool is_negation() const;  // F -> bot
  bool is_top() const;       // bot -> bot

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  bool predicate_variable = false;
  std::string name;
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::vector<Binder> binders;
  std::size_t hash = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline bool Formula::is_binary() const {
  return node_->kind == Kind::And || node_->kind == Kind::Or || node_->kind == Kind::Implies;
}
inline bool Formula::is_quantifier() const {
  return node_->kind == Kind::Forall || node_->kind == Kind::Exists;
}
inline const Term& Formula::left_term() const { return node_->terms[0]; }
inline const Term& Formula::right_term() const { return node_->terms[1]; }
inline const std::string& Formula::predicate() const { return node_->name; }
inline const std::vector<Term>& Formula::args() const { return node_->terms; }
inline bool Formula::is_predicate_variable() const { return node_->predicate_variable; }
inline Variable Formula::predicate_variable() const {
  return Variable::predicate(node_->name, static_cast<int>(node_->terms.size()));
}
inline const Formula& Formula::lhs() const { return node_->children[0]; }
inline const Formula& Formula::rhs() const { return node_->children[1]; }
inline const std::vector<Binder>& Formula::binders() const { return node_->binders; }
inline const Formula& Formula::body() const { return node_->children[0]; }
inline bool Formula::is_generalized() const {
  return is_quantifier() && !node_->binders.front().restrictor.empty();
}
inline const Variable& Formula::bound() const { return node_->binders.front().var; }
inline bool Formula::is_negation() const {
  return node_->kind == Kind::Implies && node_->children[1].kind() == Kind::Bot;
}
inline bool Formula::is_top() const { return is_negation() && node_->children[0].kind() == Kind::Bot; }
inline std::size_t Formula::hash() const { return node_->hash; }

std::size_t hash_term(const Term& t);

}  // namespace hhtkit

#endif  // HHTKIT_SYNTAX_HPP
