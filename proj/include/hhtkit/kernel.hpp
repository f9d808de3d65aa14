#ifndef HHTKIT_KERNEL_HPP
#define HHTKIT_KERNEL_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hhtkit/error.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/signature.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit::kernel {

enum class Level { HHT, HHT2, HHT2_DCA };

const char* level_name(Level l);  // HHT, HHT2, HHT2+DCA
std::optional<Level> parse_level(std::string_view s);

enum class ErrorKind {
  SchemaMismatch,
  SideConditionViolation,
  MPMismatch,
  ForwardReference,
  LevelViolation,
  ConclusionNotFirstOrder,
  ConclusionNotClosed,
};

const char* kind_name(ErrorKind k);

struct ProofError : Error {
  ProofError(ErrorKind kind, int label, std::string justification, std::string condition);
  ErrorKind kind;
  int label;  // 0 when the error concerns the proof as a whole
  std::string justification;
  std::string condition;
};

// Sorts of schema metavariables; they fix how a binding value is parsed.
enum class MetaSort {
  Formula,      // F := P(x) -> Q
  Term,         // t := s(a)
  Object,       // x := y
  SecondOrder,  // p := p/1, f := f^2
  Predicate,    // p := P or p := q/2 (constant or variable)
  Abstraction,  // L := lambda x y. F
};

// A predicate symbol given to a schema: constant P or variable p/n.
struct PredicateSymbol {
  std::string name;
  int arity = 0;
  bool variable = false;
  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;
};

using BindingValue = std::variant<Formula, Term, Variable, PredicateSymbol, Abstraction>;
using Bindings = std::map<std::string, BindingValue>;

std::string binding_to_string(const BindingValue& v);

struct SchemaInfo {
  std::string id;
  Level level;
  std::string shape;
  std::vector<std::pair<std::string, MetaSort>> metavariables;
};

// Axiom schemas available at a level, in presentation order. HHT: 19 axiom
// schemas; HHT2 adds 5; HHT2+DCA adds dca.
std::vector<SchemaInfo> list_schemas(Level level);
const SchemaInfo* find_schema(std::string_view id);

// Schema instance for fully or partially given bindings. With `target`, missing
// bindings are inferred by matching against it and the result must equal it
// (else SchemaMismatch). Side-condition failures raise SideConditionViolation.
// The inferred bindings are written back into `bindings`.
Formula instantiate_schema(const std::string& id, Bindings& bindings, const Signature& sig,
                           const std::optional<Formula>& target = std::nullopt, int label = 0);

struct Justification {
  enum class Rule { Axiom, MP, GenAll, GenEx, SOGen, SOGenEx };
  Rule rule = Rule::Axiom;
  std::string schema;
  Bindings bindings;
  int premise = 0;  // mp: the minor premise F; gen rules: the premise
  int major = 0;    // mp: the implication F -> G
  Variable var;     // gen rules

  std::string to_string() const;
};

struct ProofLine {
  int label = 0;
  Formula formula = Formula::top();
  Justification justification;
  int source_line = 0;
};

struct Proof {
  Signature signature;
  Level level = Level::HHT;
  std::vector<ProofLine> lines;

  // Proof file rendering; parse_proof(to_string()) reproduces the proof.
  std::string to_string() const;
};

// Checks every line; returns the conclusion (the last line, as written) or
// throws ProofError naming the line and failed condition.
Formula check_proof(const Proof& p);

// Conclusion of an accepted proof, provided it is closed and first-order
// (restrictors allowed).
Formula conclusion_for_pipeline(const Proof& p);

Proof parse_proof(std::string_view text);

}  // namespace hhtkit::kernel

#endif  // HHTKIT_KERNEL_HPP
