#include "hhtkit/signature.hpp"

#include <algorithm>
#include <sstream>

#include "hhtkit/error.hpp"

namespace hhtkit {

namespace {

const SymbolDecl* find_decl(const std::vector<SymbolDecl>& decls, std::string_view name) {
  auto it = std::find_if(decls.begin(), decls.end(), [&](const SymbolDecl& d) { return d.name == name; });
  return it == decls.end() ? nullptr : &*it;
}

}  // namespace

void Signature::add_function(std::string name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for function constant " + name);
  if (declares(name)) throw SignatureError("symbol declared twice: " + name);
  functions_.push_back({std::move(name), arity});
}

void Signature::add_predicate(std::string name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for predicate constant " + name);
  if (declares(name)) throw SignatureError("symbol declared twice: " + name);
  predicates_.push_back({std::move(name), arity});
}

void Signature::add_restrictor(std::string name) {
  add_predicate(name, 1);
  restrictors_.push_back(std::move(name));
}

std::optional<int> Signature::function_arity(std::string_view name) const {
  if (auto d = find_decl(functions_, name)) return d->arity;
  return std::nullopt;
}

std::optional<int> Signature::predicate_arity(std::string_view name) const {
  if (auto d = find_decl(predicates_, name)) return d->arity;
  return std::nullopt;
}

bool Signature::is_restrictor(std::string_view name) const {
  return std::find(restrictors_.begin(), restrictors_.end(), name) != restrictors_.end();
}

bool Signature::declares(std::string_view name) const {
  return find_decl(functions_, name) != nullptr || find_decl(predicates_, name) != nullptr;
}

std::vector<std::string> Signature::object_constants() const {
  std::vector<std::string> out;
  for (const auto& f : functions_)
    if (f.arity == 0) out.push_back(f.name);
  return out;
}

bool Signature::all_nullary() const {
  return std::all_of(functions_.begin(), functions_.end(), [](const SymbolDecl& d) { return d.arity == 0; });
}

void Signature::validate() const {
  if (object_constants().empty())
    throw SignatureError("signature must contain at least one object constant");
}

Signature Signature::with_object_constants(const std::vector<std::string>& names) const {
  Signature out;
  for (const auto& n : names) out.add_function(n, 0);
  for (const auto& f : functions_)
    if (f.arity > 0) out.add_function(f.name, f.arity);
  for (const auto& p : predicates_) {
    if (is_restrictor(p.name))
      out.add_restrictor(p.name);
    else
      out.add_predicate(p.name, p.arity);
  }
  return out;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  auto list = [&](const char* keyword, auto pred, bool with_arity) {
    std::vector<const SymbolDecl*> items;
    for (const auto& d : functions_)
      if (pred(d, true)) items.push_back(&d);
    for (const auto& d : predicates_)
      if (pred(d, false)) items.push_back(&d);
    if (items.empty()) return;
    os << keyword << ' ';
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) os << ", ";
      os << items[i]->name;
      if (with_arity) os << '/' << items[i]->arity;
    }
    os << ".\n";
  };
  list("const", [](const SymbolDecl& d, bool fn) { return fn && d.arity == 0; }, false);
  list("fn", [](const SymbolDecl& d, bool fn) { return fn && d.arity > 0; }, true);
  list("pred", [this](const SymbolDecl& d, bool fn) { return !fn && !is_restrictor(d.name); }, true);
  list("restrictor", [this](const SymbolDecl& d, bool fn) { return !fn && is_restrictor(d.name); }, true);
  return os.str();
}

}  // namespace hhtkit
