// ASCII rendering of formulas in the input grammar. Precedence levels (low to
// high): <-> 1, -> 2, | 3, & 4, prefix operators 5, atoms 6. The output parses
// back to a structurally identical AST.

#include <string>

#include "hhtkit/prop.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit {

namespace {

constexpr int kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kPrefix = 5, kAtom = 6;

bool is_iff(const Formula& f) {
  if (f.kind() != Formula::Kind::And) return false;
  const auto& a = f.lhs();
  const auto& b = f.rhs();
  return a.kind() == Formula::Kind::Implies && b.kind() == Formula::Kind::Implies && a.lhs() == b.rhs() &&
         a.rhs() == b.lhs();
}

int level(const Formula& f) {
  using K = Formula::Kind;
  if (is_iff(f)) return kIff;
  switch (f.kind()) {
    case K::Bot:
    case K::Equal:
    case K::Atom: return kAtom;
    case K::And: return kAnd;
    case K::Or: return kOr;
    case K::Implies:
      if (f.is_top()) return kAtom;
      if (f.is_negation()) return f.lhs().kind() == K::Equal ? kAtom : kPrefix;
      return kImp;
    case K::Forall:
    case K::Exists: return kPrefix;
  }
  return kAtom;
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int min_level, std::string& out) {
  if (level(f) < min_level) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print_args(const std::vector<Term>& args, std::string& out) {
  if (args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i].to_string();
  }
  out += ')';
}

void print(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  if (is_iff(f)) {
    print_at(f.lhs().lhs(), kIff + 1, out);
    out += " <-> ";
    print_at(f.lhs().rhs(), kIff, out);
    return;
  }
  switch (f.kind()) {
    case K::Bot: out += "bot"; return;
    case K::Equal:
      out += f.left_term().to_string() + " = " + f.right_term().to_string();
      return;
    case K::Atom:
      out += f.predicate();
      print_args(f.args(), out);
      return;
    case K::And:
      print_at(f.lhs(), kAnd, out);
      out += " & ";
      print_at(f.rhs(), kAnd + 1, out);
      return;
    case K::Or:
      print_at(f.lhs(), kOr, out);
      out += " | ";
      print_at(f.rhs(), kOr + 1, out);
      return;
    case K::Implies:
      if (f.is_top()) {
        out += "top";
        return;
      }
      if (f.is_negation()) {
        if (f.lhs().kind() == K::Equal) {
          out += f.lhs().left_term().to_string() + " != " + f.lhs().right_term().to_string();
          return;
        }
        out += "not ";
        print_at(f.lhs(), kPrefix, out);
        return;
      }
      print_at(f.lhs(), kImp + 1, out);
      out += " -> ";
      print_at(f.rhs(), kImp, out);
      return;
    case K::Forall:
    case K::Exists: {
      out += f.kind() == K::Forall ? "forall " : "exists ";
      if (f.is_generalized()) {
        out += '(';
        for (std::size_t i = 0; i < f.binders().size(); ++i) {
          if (i) out += ", ";
          out += f.binders()[i].var.name + ":" + f.binders()[i].restrictor;
        }
        out += ") ";
      } else {
        out += f.bound().to_string() + " ";
      }
      print_at(f.body(), kPrefix, out);
      return;
    }
  }
}

// PropFormula: sets print as And{...}/Or{...}; a two-element conjunction of
// converse implications prints as <->.
bool prop_is_iff(const PropFormula& f) {
  if (f.kind() != PropFormula::Kind::And || f.children().size() != 2) return false;
  const auto& a = f.children()[0];
  const auto& b = f.children()[1];
  return a.kind() == PropFormula::Kind::Implies && b.kind() == PropFormula::Kind::Implies && a.lhs() == b.rhs() &&
         a.rhs() == b.lhs();
}

int prop_level(const PropFormula& f) {
  if (prop_is_iff(f)) return kIff;
  if (f.kind() == PropFormula::Kind::Implies) return f.rhs().is_bot() ? kPrefix : kImp;
  return kAtom;
}

void print_prop(const PropFormula& f, std::string& out);

void print_prop_at(const PropFormula& f, int min_level, std::string& out) {
  if (prop_level(f) < min_level) {
    out += '(';
    print_prop(f, out);
    out += ')';
  } else {
    print_prop(f, out);
  }
}

void print_prop(const PropFormula& f, std::string& out) {
  using K = PropFormula::Kind;
  if (prop_is_iff(f)) {
    print_prop_at(f.children()[0].lhs(), kIff + 1, out);
    out += " <-> ";
    print_prop_at(f.children()[0].rhs(), kIff, out);
    return;
  }
  switch (f.kind()) {
    case K::Atom: out += f.name(); return;
    case K::And:
    case K::Or: {
      if (f.children().empty()) {
        out += f.kind() == K::And ? "top" : "bot";
        return;
      }
      out += f.kind() == K::And ? "And{" : "Or{";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += "; ";
        print_prop(f.children()[i], out);
      }
      out += '}';
      return;
    }
    case K::Implies:
      if (f.rhs().is_bot()) {
        out += "not ";
        print_prop_at(f.lhs(), kPrefix, out);
        return;
      }
      print_prop_at(f.lhs(), kImp + 1, out);
      out += " -> ";
      print_prop_at(f.rhs(), kImp, out);
      return;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

std::string PropFormula::to_string() const {
  std::string out;
  print_prop(*this, out);
  return out;
}

}  // namespace hhtkit
