#include "hhtkit/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hhtkit/error.hpp"

namespace hhtkit {

namespace {

constexpr std::array<std::string_view, 16> kReserved = {
    "forall", "exists", "not",   "bot",   "top", "And",  "Or",   "lambda",
    "by",     "with",   "level", "const", "fn",  "pred", "restrictor", "default"};

constexpr std::array<std::string_view, 5> kMultiCharSymbols = {"<->", "->", "!=", ":=", "=>"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

bool is_reserved_word(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size()) {
        if (ident_char(text[j])) {
          ++j;
        } else if (text[j] == '-' && j + 1 < text.size() && std::isalnum(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;  // hyphenated names such as gen-all, cet-inject
        } else {
          break;
        }
      }
      tok.type = Token::Type::Identifier;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.type = Token::Type::Number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else {
      tok.type = Token::Type::Symbol;
      std::size_t len = 1;
      for (auto sym : kMultiCharSymbols) {
        if (text.substr(i, sym.size()) == sym) {
          len = sym.size();
          break;
        }
      }
      tok.text = std::string(text.substr(i, len));
      static constexpr std::string_view kSingles = "(),;:.{}/^=&|+\\*";
      if (len == 1 && kSingles.find(c) == std::string_view::npos)
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      advance(len);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.type = Token::Type::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Token stream

Parser::Parser(std::string_view text) : tokens_(tokenize(text)) {}

const Token& Parser::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Parser::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool Parser::check(std::string_view text) const {
  const auto& t = peek();
  return t.type != Token::Type::End && t.text == text;
}

bool Parser::accept(std::string_view text) {
  if (!check(text)) return false;
  next();
  return true;
}

void Parser::expect(std::string_view text) {
  if (!accept(text)) fail("expected '" + std::string(text) + "'");
}

std::string Parser::expect_identifier(std::string_view what) {
  const auto& t = peek();
  if (t.type != Token::Type::Identifier || is_reserved_word(t.text)) fail("expected " + std::string(what));
  return next().text;
}

int Parser::expect_number() {
  if (peek().type != Token::Type::Number) fail("expected a number");
  const auto t = next();
  try {
    return std::stoi(t.text);
  } catch (const std::out_of_range&) {
    fail_at(t, "number out of range");
  }
}

void Parser::fail(const std::string& message) const { fail_at(peek(), message); }

void Parser::fail_at(const Token& at, const std::string& message) const {
  std::string found = at.type == Token::Type::End ? "end of input" : "'" + at.text + "'";
  throw ParseError(message + " (found " + found + ")", at.line, at.column);
}

// ---------------------------------------------------------------------------
// Signature block

Signature Parser::parse_signature_block() {
  Signature sig;
  const Token start = peek();
  auto declare = [&](const Token& at, auto&& fn) {
    try {
      fn();
    } catch (const SignatureError& e) {
      fail_at(at, e.what());
    }
  };
  while (check("const") || check("fn") || check("pred") || check("restrictor")) {
    const std::string kw = next().text;
    do {
      const Token at = peek();
      std::string name = expect_identifier("symbol name");
      if (kw == "const") {
        declare(at, [&] { sig.add_function(name, 0); });
      } else if (kw == "restrictor") {
        if (accept("/")) {
          const Token ar = peek();
          if (expect_number() != 1) fail_at(ar, "restrictors are unary");
        }
        declare(at, [&] { sig.add_restrictor(name); });
      } else {
        expect("/");
        int arity = expect_number();
        if (kw == "fn") {
          declare(at, [&] { sig.add_function(name, arity); });
        } else {
          declare(at, [&] { sig.add_predicate(name, arity); });
        }
      }
    } while (accept(","));
    expect(".");
  }
  try {
    sig.validate();
  } catch (const SignatureError& e) {
    fail_at(start, e.what());
  }
  return sig;
}

// ---------------------------------------------------------------------------
// First- and second-order formulas

Formula Parser::parse_formula(const Signature& sig) {
  scopes_.clear();
  return parse_iff(sig);
}

Formula Parser::parse_iff(const Signature& sig) {
  Formula lhs = parse_imp(sig);
  if (accept("<->")) {
    Formula rhs = parse_iff(sig);
    return Formula::iff(lhs, rhs);
  }
  return lhs;
}

Formula Parser::parse_imp(const Signature& sig) {
  Formula lhs = parse_or(sig);
  if (accept("->")) return Formula::implies(lhs, parse_imp(sig));
  return lhs;
}

Formula Parser::parse_or(const Signature& sig) {
  Formula acc = parse_and(sig);
  while (accept("|")) acc = Formula::disj(acc, parse_and(sig));
  return acc;
}

Formula Parser::parse_and(const Signature& sig) {
  Formula acc = parse_unary(sig);
  while (accept("&")) acc = Formula::conj(acc, parse_unary(sig));
  return acc;
}

Formula Parser::parse_unary(const Signature& sig) {
  if (accept("not")) return Formula::neg(parse_unary(sig));
  if (accept("forall")) return parse_quantifier(sig, Formula::Kind::Forall);
  if (accept("exists")) return parse_quantifier(sig, Formula::Kind::Exists);
  return parse_primary(sig);
}

Variable Parser::parse_object_variable(const Signature& sig) {
  const Token at = peek();
  std::string name = expect_identifier("variable");
  if (sig.declares(name)) fail_at(at, "'" + name + "' is a constant of the signature, not a variable");
  return Variable::object(std::move(name));
}

Variable Parser::parse_second_order_variable() {
  const Token at = peek();
  std::string name = expect_identifier("second-order variable");
  if (accept("/")) return Variable::predicate(std::move(name), expect_number());
  if (accept("^")) {
    int arity = expect_number();
    if (arity < 1) fail_at(at, "function variables have arity at least 1");
    return Variable::function(std::move(name), arity);
  }
  fail("expected '/n' (predicate variable) or '^n' (function variable)");
}

Formula Parser::parse_quantifier(const Signature& sig, Formula::Kind q) {
  std::vector<Binder> binders;
  if (accept("(")) {
    do {
      const Token at = peek();
      Variable v = parse_object_variable(sig);
      expect(":");
      const Token rat = peek();
      std::string r = expect_identifier("restrictor");
      if (!sig.is_restrictor(r)) fail_at(rat, "'" + r + "' is not a declared restrictor");
      for (const auto& b : binders)
        if (b.var == v) fail_at(at, "variable '" + v.name + "' repeated in generalized variable");
      binders.push_back({std::move(v), std::move(r)});
    } while (accept(","));
    expect(")");
  } else {
    const Token at = peek();
    if (peek(1).text == "/" || peek(1).text == "^") {
      Variable v = parse_second_order_variable();
      if (sig.declares(v.name)) fail_at(at, "'" + v.name + "' is a constant of the signature, not a variable");
      binders.push_back({std::move(v), {}});
    } else {
      binders.push_back({parse_object_variable(sig), {}});
    }
  }
  const std::size_t depth = scopes_.size();
  for (const auto& b : binders) scopes_.push_back({b.var});
  Formula body = parse_unary(sig);
  scopes_.resize(depth);
  return Formula::quantifier(q, std::move(binders), std::move(body));
}

const Variable* Parser::lookup_bound(const std::string& name) const {
  for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
    if (it->var.name == name) return &it->var;
  return nullptr;
}

void Parser::note_free(const Token& at, const Variable& v) {
  auto [it, inserted] = free_second_order_.emplace(v.name, v);
  if (!inserted && it->second != v)
    fail_at(at, "'" + v.name + "' used both as " + it->second.to_string() + " and as " + v.to_string());
}

std::vector<Term> Parser::parse_arguments(const Signature& sig) {
  std::vector<Term> args;
  if (!accept("(")) return args;
  if (accept(")")) return args;
  do {
    args.push_back(parse_term(sig));
  } while (accept(","));
  expect(")");
  return args;
}

Term Parser::resolve_term(const Signature& sig, const Token& at, const std::string& name, std::vector<Term> args,
                          bool applied) {
  const int n = static_cast<int>(args.size());
  if (auto ar = sig.function_arity(name)) {
    if (*ar != n)
      fail_at(at, "function constant '" + name + "' has arity " + std::to_string(*ar) + ", applied to " +
                      std::to_string(n) + " arguments");
    return Term::function(name, std::move(args));
  }
  if (sig.predicate_arity(name)) fail_at(at, "predicate constant '" + name + "' used as a term");
  if (const Variable* b = lookup_bound(name)) {
    if (b->sort == VarSort::Function) {
      if (b->arity != n)
        fail_at(at, "function variable '" + name + "' has arity " + std::to_string(b->arity) + ", applied to " +
                        std::to_string(n) + " arguments");
      return Term::function_variable(name, std::move(args));
    }
    if (b->sort == VarSort::Object) {
      if (applied) fail_at(at, "object variable '" + name + "' applied to arguments");
      return Term::variable(name);
    }
    fail_at(at, "predicate variable '" + name + "' used as a term");
  }
  if (applied) {
    if (n == 0) fail_at(at, "function variable '" + name + "' needs arguments");
    note_free(at, Variable::function(name, n));
    return Term::function_variable(name, std::move(args));
  }
  return Term::variable(name);
}

Formula Parser::resolve_atom(const Signature& sig, const Token& at, const std::string& name, std::vector<Term> args) {
  const int n = static_cast<int>(args.size());
  if (auto ar = sig.predicate_arity(name)) {
    if (*ar != n)
      fail_at(at, "predicate constant '" + name + "' has arity " + std::to_string(*ar) + ", applied to " +
                      std::to_string(n) + " arguments");
    return Formula::atom(name, std::move(args));
  }
  if (sig.function_arity(name)) fail_at(at, "expected a formula, found the term '" + name + "'");
  if (const Variable* b = lookup_bound(name)) {
    if (b->sort != VarSort::Predicate) fail_at(at, "expected a formula, found the variable '" + name + "'");
    if (b->arity != n)
      fail_at(at, "predicate variable '" + name + "' has arity " + std::to_string(b->arity) + ", applied to " +
                      std::to_string(n) + " arguments");
    return Formula::predicate_variable_atom(name, std::move(args));
  }
  note_free(at, Variable::predicate(name, n));
  return Formula::predicate_variable_atom(name, std::move(args));
}

Formula Parser::parse_primary(const Signature& sig) {
  if (accept("bot")) return Formula::bot();
  if (accept("top")) return Formula::top();
  if (accept("(")) {
    Formula f = parse_iff(sig);
    expect(")");
    return f;
  }
  const Token at = peek();
  std::string name = expect_identifier("formula");
  const bool applied = check("(");
  std::vector<Term> args = parse_arguments(sig);
  if (check("=") || check("!=")) {
    const bool negated = next().text == "!=";
    Term lhs = resolve_term(sig, at, name, std::move(args), applied);
    Term rhs = parse_term(sig);
    return negated ? Formula::not_equal(std::move(lhs), std::move(rhs))
                   : Formula::equal(std::move(lhs), std::move(rhs));
  }
  return resolve_atom(sig, at, name, std::move(args));
}

Term Parser::parse_term(const Signature& sig) {
  const Token at = peek();
  std::string name = expect_identifier("term");
  const bool applied = check("(");
  std::vector<Term> args = parse_arguments(sig);
  return resolve_term(sig, at, name, std::move(args), applied);
}

Abstraction Parser::parse_abstraction(const Signature& sig) {
  expect("lambda");
  std::vector<Variable> params;
  while (!check(".")) {
    const Token at = peek();
    Variable v = parse_object_variable(sig);
    if (std::find(params.begin(), params.end(), v) != params.end())
      fail_at(at, "repeated abstraction parameter '" + v.name + "'");
    params.push_back(std::move(v));
  }
  expect(".");
  scopes_.clear();
  for (const auto& p : params) scopes_.push_back({p});
  Formula body = parse_iff(sig);
  scopes_.clear();
  return {std::move(params), std::move(body)};
}

// ---------------------------------------------------------------------------
// Propositional formulas

PropFormula Parser::parse_prop() { return parse_prop_iff(); }

PropFormula Parser::parse_prop_iff() {
  PropFormula lhs = parse_prop_imp();
  if (accept("<->")) return PropFormula::iff(lhs, parse_prop_iff());
  return lhs;
}

PropFormula Parser::parse_prop_imp() {
  PropFormula lhs = parse_prop_or();
  if (accept("->")) return PropFormula::implies(lhs, parse_prop_imp());
  return lhs;
}

PropFormula Parser::parse_prop_or() {
  PropFormula acc = parse_prop_and();
  while (accept("|")) acc = PropFormula::disj({acc, parse_prop_and()});
  return acc;
}

PropFormula Parser::parse_prop_and() {
  PropFormula acc = parse_prop_unary();
  while (accept("&")) acc = PropFormula::conj({acc, parse_prop_unary()});
  return acc;
}

PropFormula Parser::parse_prop_unary() {
  if (accept("not")) return PropFormula::neg(parse_prop_unary());
  return parse_prop_primary();
}

PropFormula Parser::parse_prop_primary() {
  if (accept("bot")) return PropFormula::bot();
  if (accept("top")) return PropFormula::top();
  if (accept("(")) {
    PropFormula f = parse_prop_iff();
    expect(")");
    return f;
  }
  if (check("And") || check("Or")) {
    const bool is_and = next().text == "And";
    expect("{");
    std::vector<PropFormula> items;
    if (!check("}")) {
      do {
        items.push_back(parse_prop_iff());
      } while (accept(";"));
    }
    expect("}");
    return is_and ? PropFormula::conj(std::move(items)) : PropFormula::disj(std::move(items));
  }
  return PropFormula::atom(expect_identifier("propositional atom"));
}

// ---------------------------------------------------------------------------
// Convenience entry points

namespace {

void expect_end(Parser& p) {
  p.accept(";");
  if (!p.at_end()) p.fail("unexpected trailing input");
}

}  // namespace

Signature parse_signature(std::string_view text) {
  Parser p(text);
  Signature sig = p.parse_signature_block();
  if (!p.at_end()) p.fail("unexpected input after signature block");
  return sig;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Parser p(text);
  Formula f = p.parse_formula(sig);
  expect_end(p);
  return f;
}

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p(text);
  Term t = p.parse_term(sig);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

PropFormula parse_prop_formula(std::string_view text) {
  Parser p(text);
  PropFormula f = p.parse_prop();
  expect_end(p);
  return f;
}

FormulaDocument parse_formula_document(std::string_view text) {
  Parser p(text);
  Signature sig = p.parse_signature_block();
  Formula f = p.parse_formula(sig);
  expect_end(p);
  return {std::move(sig), std::move(f)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hhtkit
