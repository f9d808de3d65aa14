#include "hhtkit/syntax.hpp"

#include <functional>
#include <stdexcept>

#include "hhtkit/error.hpp"

namespace hhtkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name), {}); }

Term Term::function(std::string name, std::vector<Term> args) {
  return Term(Kind::Function, std::move(name), std::move(args));
}

Term Term::function_variable(std::string name, std::vector<Term> args) {
  return Term(Kind::FunctionVariable, std::move(name), std::move(args));
}

bool Term::is_ground() const {
  if (kind_ != Kind::Function) return false;
  for (const auto& a : args_)
    if (!a.is_ground()) return false;
  return true;
}

bool Term::has_function_variables() const {
  if (kind_ == Kind::FunctionVariable) return true;
  for (const auto& a : args_)
    if (a.has_function_variables()) return true;
  return false;
}

int Term::depth() const {
  int d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

bool Term::contains(const Term& sub) const {
  if (*this == sub) return true;
  for (const auto& a : args_)
    if (a.contains(sub)) return true;
  return false;
}

std::string Term::to_string() const {
  if (args_.empty()) return name_;
  std::string out = name_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ", ";
    out += args_[i].to_string();
  }
  return out + ")";
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i)
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t hash_term(const Term& t) {
  std::size_t h = mix(static_cast<std::size_t>(t.kind()), std::hash<std::string>{}(t.name()));
  for (const auto& a : t.args()) h = mix(h, hash_term(a));
  return h;
}

std::string Variable::to_string() const {
  switch (sort) {
    case VarSort::Object: return name;
    case VarSort::Predicate: return name + "/" + std::to_string(arity);
    case VarSort::Function: return name + "^" + std::to_string(arity);
  }
  return name;
}

// ---------------------------------------------------------------------------
// Formula

namespace {

std::size_t hash_node(const Formula::Node& n) {
  std::size_t h = mix(static_cast<std::size_t>(n.kind), n.predicate_variable ? 7 : 3);
  h = mix(h, std::hash<std::string>{}(n.name));
  for (const auto& t : n.terms) h = mix(h, hash_term(t));
  for (const auto& c : n.children) h = mix(h, c.hash());
  for (const auto& b : n.binders) {
    h = mix(h, std::hash<std::string>{}(b.var.name));
    h = mix(h, static_cast<std::size_t>(b.var.sort) * 31 + static_cast<std::size_t>(b.var.arity));
    h = mix(h, std::hash<std::string>{}(b.restrictor));
  }
  return h;
}

}  // namespace

Formula Formula::bot() {
  static const Formula shared = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    n->hash = hash_node(*n);
    return Formula(std::move(n));
  }();
  return shared;
}

Formula Formula::equal(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Equal;
  n->terms = {std::move(lhs), std::move(rhs)};
  n->hash = hash_node(*n);
  return Formula(std::move(n));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(predicate);
  n->terms = std::move(args);
  n->hash = hash_node(*n);
  return Formula(std::move(n));
}

Formula Formula::predicate_variable_atom(std::string variable, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->predicate_variable = true;
  n->name = std::move(variable);
  n->terms = std::move(args);
  n->hash = hash_node(*n);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }

Formula Formula::quantifier(Kind q, std::vector<Binder> binders, Formula body) {
  if (q != Kind::Forall && q != Kind::Exists) throw std::invalid_argument("not a quantifier kind");
  if (binders.empty()) throw std::invalid_argument("quantifier without binders");
  const bool generalized = !binders.front().restrictor.empty();
  if (!generalized && binders.size() != 1)
    throw std::invalid_argument("plain quantifiers bind exactly one variable");
  if (generalized) {
    for (std::size_t i = 0; i < binders.size(); ++i) {
      if (binders[i].restrictor.empty() || binders[i].var.sort != VarSort::Object)
        throw std::invalid_argument("generalized variables bind restricted object variables");
      for (std::size_t j = 0; j < i; ++j)
        if (binders[j].var == binders[i].var)
          throw std::invalid_argument("generalized variable repeats " + binders[i].var.name);
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = q;
  n->binders = std::move(binders);
  n->children = {std::move(body)};
  n->hash = hash_node(*n);
  return Formula(std::move(n));
}

Formula Formula::forall(Variable v, Formula body) {
  return quantifier(Kind::Forall, {Binder{std::move(v), {}}}, std::move(body));
}

Formula Formula::exists(Variable v, Formula body) {
  return quantifier(Kind::Exists, {Binder{std::move(v), {}}}, std::move(body));
}

Formula Formula::top() { return implies(bot(), bot()); }
Formula Formula::neg(Formula f) { return implies(std::move(f), bot()); }

Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

Formula Formula::not_equal(Term lhs, Term rhs) { return neg(equal(std::move(lhs), std::move(rhs))); }

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw std::invalid_argument("conj_all of an empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
  if (k != Kind::And && k != Kind::Or && k != Kind::Implies) throw std::invalid_argument("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = {std::move(a), std::move(b)};
  n->hash = hash_node(*n);
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.predicate_variable == y.predicate_variable &&
         x.name == y.name && x.terms == y.terms && x.binders == y.binders && x.children == y.children;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.predicate_variable <=> y.predicate_variable; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.terms.size() <=> y.terms.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.terms.size(); ++i)
    if (auto c = x.terms[i] <=> y.terms[i]; c != 0) return c;
  if (auto c = x.binders <=> y.binders; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace hhtkit
