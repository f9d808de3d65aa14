#ifndef HHTKIT_PARSER_HPP
#define HHTKIT_PARSER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hhtkit/prop.hpp"
#include "hhtkit/signature.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit {

struct Token {
  enum class Type { Identifier, Number, Symbol, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view text);

// Lambda abstraction `lambda x1 ... xn. F` used to instantiate predicate variables.
struct Abstraction {
  std::vector<Variable> params;
  Formula body;
  friend bool operator==(const Abstraction&, const Abstraction&) = default;
};

// Recursive-descent reader over one token stream. The file readers of the
// instantiation and proof modules drive it declaration by declaration.
//
// Name resolution: identifiers declared in the signature are constants;
// identifiers bound by an enclosing quantifier are variables of that sort;
// any other identifier is a variable whose sort follows from its position
// (term position: object variable, or function variable when applied;
// atom position: predicate variable of the observed arity).
class Parser {
 public:
  explicit Parser(std::string_view text);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().type == Token::Type::End; }
  bool check(std::string_view text) const;
  bool accept(std::string_view text);
  void expect(std::string_view text);
  std::string expect_identifier(std::string_view what = "identifier");
  int expect_number();
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& at, const std::string& message) const;

  // `const a, b.  fn s/1.  pred P/1, Q/0.  restrictor R/1.` (any order, repeatable).
  // Rejects a signature without object constants.
  Signature parse_signature_block();

  Formula parse_formula(const Signature& sig);
  Term parse_term(const Signature& sig);
  PropFormula parse_prop();
  // p/2 or f^1
  Variable parse_second_order_variable();
  Variable parse_object_variable(const Signature& sig);
  Abstraction parse_abstraction(const Signature& sig);

 private:
  struct Scope {
    Variable var;
  };

  Formula parse_iff(const Signature& sig);
  Formula parse_imp(const Signature& sig);
  Formula parse_or(const Signature& sig);
  Formula parse_and(const Signature& sig);
  Formula parse_unary(const Signature& sig);
  Formula parse_quantifier(const Signature& sig, Formula::Kind q);
  Formula parse_primary(const Signature& sig);
  Term resolve_term(const Signature& sig, const Token& at, const std::string& name, std::vector<Term> args,
                    bool applied);
  Formula resolve_atom(const Signature& sig, const Token& at, const std::string& name, std::vector<Term> args);
  std::vector<Term> parse_arguments(const Signature& sig);
  const Variable* lookup_bound(const std::string& name) const;
  void note_free(const Token& at, const Variable& v);

  PropFormula parse_prop_iff();
  PropFormula parse_prop_imp();
  PropFormula parse_prop_or();
  PropFormula parse_prop_and();
  PropFormula parse_prop_unary();
  PropFormula parse_prop_primary();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Scope> scopes_;
  std::map<std::string, Variable> free_second_order_;
};

bool is_reserved_word(std::string_view word);

Signature parse_signature(std::string_view text);
Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);
PropFormula parse_prop_formula(std::string_view text);

// `.fof` document: a signature block followed by one formula (optional trailing `;`).
struct FormulaDocument {
  Signature signature;
  Formula formula;
};
FormulaDocument parse_formula_document(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace hhtkit

#endif  // HHTKIT_PARSER_HPP
