#ifndef HHTKIT_SIGNATURE_HPP
#define HHTKIT_SIGNATURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hhtkit {

struct SymbolDecl {
  std::string name;
  int arity = 0;
  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

// First-order signature: function constants (arity 0 = object constants),
// predicate constants (arity 0 = propositional constants) and the subset of
// unary predicates designated as restrictors. Declaration order is kept; it
// fixes the order of Herbrand universes and of the conjuncts of DCA.
class Signature {
 public:
  void add_function(std::string name, int arity);
  void add_predicate(std::string name, int arity);
  // Declares a unary predicate and marks it as a restrictor.
  void add_restrictor(std::string name);

  std::optional<int> function_arity(std::string_view name) const;
  std::optional<int> predicate_arity(std::string_view name) const;
  bool is_restrictor(std::string_view name) const;
  bool declares(std::string_view name) const;

  const std::vector<SymbolDecl>& functions() const { return functions_; }
  const std::vector<SymbolDecl>& predicates() const { return predicates_; }
  const std::vector<std::string>& restrictors() const { return restrictors_; }
  std::vector<std::string> object_constants() const;
  bool all_nullary() const;

  // Throws SignatureError unless the signature has at least one object constant.
  void validate() const;

  // Copy of this signature whose object constants are exactly `names`.
  Signature with_object_constants(const std::vector<std::string>& names) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<SymbolDecl> functions_;
  std::vector<SymbolDecl> predicates_;
  std::vector<std::string> restrictors_;
};

}  // namespace hhtkit

#endif  // HHTKIT_SIGNATURE_HPP
