#include "hhtkit/transform.hpp"

#include <algorithm>
#include <optional>

#include "hhtkit/error.hpp"

namespace hhtkit {

namespace {

using K = Formula::Kind;

void collect_term(const Term& t, VariableSet& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: out.insert(Variable::object(t.name())); return;
    case Term::Kind::FunctionVariable: out.insert(Variable::function(t.name(), t.arity())); [[fallthrough]];
    case Term::Kind::Function:
      for (const auto& a : t.args()) collect_term(a, out);
      return;
  }
}

void collect_free(const Formula& f, VariableSet& bound, VariableSet& out) {
  auto add_terms = [&](const std::vector<Term>& ts) {
    VariableSet vs;
    for (const auto& t : ts) collect_term(t, vs);
    for (const auto& v : vs)
      if (!bound.contains(v)) out.insert(v);
  };
  switch (f.kind()) {
    case K::Bot: return;
    case K::Equal: add_terms(f.args()); return;
    case K::Atom:
      if (f.is_predicate_variable() && !bound.contains(f.predicate_variable())) out.insert(f.predicate_variable());
      add_terms(f.args());
      return;
    case K::And:
    case K::Or:
    case K::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case K::Forall:
    case K::Exists: {
      std::vector<Variable> added;
      for (const auto& b : f.binders())
        if (bound.insert(b.var).second) added.push_back(b.var);
      collect_free(f.body(), bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
  }
}

// Simultaneous replacement of free variables. Object variables map to terms,
// function variables to other function variables, predicate variables to
// abstractions.
struct Replacement {
  std::map<std::string, Term> objects;
  std::map<Variable, Variable> functions;
  struct Lambda {
    std::vector<Variable> params;
    Formula body;
    VariableSet free;  // free variables of body minus params
  };
  std::map<Variable, Lambda> predicates;

  bool empty() const { return objects.empty() && functions.empty() && predicates.empty(); }
};

class Substituter {
 public:
  explicit Substituter(Replacement r) : r_(std::move(r)) {}

  bool ok() const { return ok_; }

  Formula apply(const Formula& f) {
    switch (f.kind()) {
      case K::Bot: return f;
      case K::Equal: return Formula::equal(term(f.left_term()), term(f.right_term()));
      case K::Atom: {
        std::vector<Term> args;
        args.reserve(f.args().size());
        for (const auto& a : f.args()) args.push_back(term(a));
        if (f.is_predicate_variable()) {
          auto it = r_.predicates.find(f.predicate_variable());
          if (it != r_.predicates.end()) return expand(it->second, args);
          return Formula::predicate_variable_atom(f.predicate(), std::move(args));
        }
        return Formula::atom(f.predicate(), std::move(args));
      }
      case K::And:
      case K::Or:
      case K::Implies: return Formula::binary(f.kind(), apply(f.lhs()), apply(f.rhs()));
      case K::Forall:
      case K::Exists: {
        // Shadowed mappings are suspended inside the quantifier.
        Replacement saved = r_;
        for (const auto& b : f.binders()) {
          if (b.var.sort == VarSort::Object) r_.objects.erase(b.var.name);
          r_.functions.erase(b.var);
          r_.predicates.erase(b.var);
        }
        if (r_.empty()) {
          r_ = std::move(saved);
          return f;
        }
        std::vector<Variable> added;
        for (const auto& b : f.binders())
          if (bound_.insert(b.var).second) added.push_back(b.var);
        Formula body = apply(f.body());
        for (const auto& v : added) bound_.erase(v);
        r_ = std::move(saved);
        return Formula::quantifier(f.kind(), f.binders(), std::move(body));
      }
    }
    return f;
  }

  Term term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        auto it = r_.objects.find(t.name());
        if (it == r_.objects.end()) return t;
        check_capture(term_vars(it->second));
        return it->second;
      }
      case Term::Kind::Function:
      case Term::Kind::FunctionVariable: {
        if (t.args().empty()) return t;
        std::vector<Term> args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(term(a));
        if (t.kind() == Term::Kind::FunctionVariable) {
          auto it = r_.functions.find(Variable::function(t.name(), t.arity()));
          if (it != r_.functions.end()) {
            check_capture({it->second});
            return Term::function_variable(it->second.name, std::move(args));
          }
          return Term::function_variable(t.name(), std::move(args));
        }
        return Term::function(t.name(), std::move(args));
      }
    }
    return t;
  }

 private:
  static VariableSet term_vars(const Term& t) {
    VariableSet s;
    collect_term(t, s);
    return s;
  }

  void check_capture(const VariableSet& inserted) {
    for (const auto& v : inserted)
      if (bound_.contains(v)) ok_ = false;
  }

  Formula expand(const Replacement::Lambda& lam, const std::vector<Term>& args) {
    check_capture(lam.free);
    Replacement inner;
    for (std::size_t i = 0; i < lam.params.size(); ++i) inner.objects.emplace(lam.params[i].name, args[i]);
    Substituter sub(std::move(inner));
    Formula out = sub.apply(lam.body);
    if (!sub.ok()) ok_ = false;
    return out;
  }

  Replacement r_;
  VariableSet bound_;
  bool ok_ = true;
};

SubstitutionResult run(const Formula& f, Replacement r) {
  Substituter s(std::move(r));
  Formula out = s.apply(f);
  return {std::move(out), s.ok()};
}

}  // namespace

VariableSet term_variables(const Term& t) {
  VariableSet out;
  collect_term(t, out);
  return out;
}

VariableSet free_variables(const Formula& f) {
  VariableSet bound, out;
  collect_free(f, bound, out);
  return out;
}

bool occurs_free(const Formula& f, const Variable& v) { return free_variables(f).contains(v); }

bool is_closed(const Formula& f) { return free_variables(f).empty(); }

bool is_first_order(const Formula& f) {
  switch (f.kind()) {
    case K::Bot: return true;
    case K::Equal:
    case K::Atom:
      if (f.kind() == K::Atom && f.is_predicate_variable()) return false;
      return std::none_of(f.args().begin(), f.args().end(),
                          [](const Term& t) { return t.has_function_variables(); });
    case K::And:
    case K::Or:
    case K::Implies: return is_first_order(f.lhs()) && is_first_order(f.rhs());
    case K::Forall:
    case K::Exists:
      return !f.bound().second_order() && is_first_order(f.body());
  }
  return true;
}

bool has_restrictors(const Formula& f) {
  if (f.is_binary()) return has_restrictors(f.lhs()) || has_restrictors(f.rhs());
  if (f.is_quantifier()) return f.is_generalized() || has_restrictors(f.body());
  return false;
}

int formula_depth(const Formula& f) {
  if (f.is_binary()) return 1 + std::max(formula_depth(f.lhs()), formula_depth(f.rhs()));
  if (f.is_quantifier()) return 1 + formula_depth(f.body());
  return 0;
}

SubstitutionResult substitute_term(const Formula& f, const Variable& v, const Term& t) {
  if (v.sort != VarSort::Object) throw std::invalid_argument("substitute_term: not an object variable");
  Replacement r;
  r.objects.emplace(v.name, t);
  return run(f, std::move(r));
}

Formula substitute_term_checked(const Formula& f, const Variable& v, const Term& t) {
  auto r = substitute_term(f, v, t);
  if (!r.substitutable)
    throw CaptureViolation("term " + t.to_string() + " is not substitutable for " + v.name + " in " + f.to_string());
  return std::move(r.result);
}

Term substitute_in_term(const Term& t, const std::string& var, const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Variable: return t.name() == var ? replacement : t;
    case Term::Kind::Function:
    case Term::Kind::FunctionVariable: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(substitute_in_term(a, var, replacement));
      return t.kind() == Term::Kind::Function ? Term::function(t.name(), std::move(args))
                                              : Term::function_variable(t.name(), std::move(args));
    }
  }
  return t;
}

SubstitutionResult substitute_variable(const Formula& f, const Variable& v, const Variable& w) {
  if (v.sort != w.sort || v.arity != w.arity)
    throw std::invalid_argument("substitute_variable: " + v.to_string() + " and " + w.to_string() + " differ in sort");
  Replacement r;
  switch (v.sort) {
    case VarSort::Object: r.objects.emplace(v.name, Term::variable(w.name)); break;
    case VarSort::Function: r.functions.emplace(v, w); break;
    case VarSort::Predicate: {
      std::vector<Variable> params;
      std::vector<Term> args;
      for (int i = 0; i < v.arity; ++i) {
        params.push_back(Variable::object("_" + std::to_string(i)));
        args.push_back(Term::variable(params.back().name));
      }
      Formula body = Formula::predicate_variable_atom(w.name, std::move(args));
      r.predicates.emplace(v, Replacement::Lambda{params, body, {w}});
      break;
    }
  }
  return run(f, std::move(r));
}

SubstitutionResult substitute_predicate(const Formula& f, const Variable& p, const std::vector<Variable>& params,
                                        const Formula& body) {
  if (p.sort != VarSort::Predicate || static_cast<int>(params.size()) != p.arity)
    throw std::invalid_argument("substitute_predicate: abstraction arity does not match " + p.to_string());
  VariableSet free = free_variables(body);
  for (const auto& x : params) free.erase(x);
  Replacement r;
  r.predicates.emplace(p, Replacement::Lambda{params, body, std::move(free)});
  return run(f, std::move(r));
}

Formula eliminate_restrictors(const Formula& f) {
  switch (f.kind()) {
    case K::Bot:
    case K::Equal:
    case K::Atom: return f;
    case K::And:
    case K::Or:
    case K::Implies: {
      Formula a = eliminate_restrictors(f.lhs());
      Formula b = eliminate_restrictors(f.rhs());
      return Formula::binary(f.kind(), std::move(a), std::move(b));
    }
    case K::Forall:
    case K::Exists: {
      Formula body = eliminate_restrictors(f.body());
      if (!f.is_generalized()) return Formula::quantifier(f.kind(), f.binders(), std::move(body));
      std::vector<Formula> guards;
      for (const auto& b : f.binders()) guards.push_back(Formula::atom(b.restrictor, {Term::variable(b.var.name)}));
      Formula guard = Formula::conj_all(guards);
      Formula out = f.kind() == K::Forall ? Formula::implies(guard, body) : Formula::conj(guard, body);
      for (auto it = f.binders().rbegin(); it != f.binders().rend(); ++it)
        out = Formula::quantifier(f.kind(), {Binder{it->var, {}}}, std::move(out));
      return out;
    }
  }
  return f;
}

Formula universal_closure(const Formula& f) {
  VariableSet free = free_variables(f);
  Formula out = f;
  for (auto it = free.rbegin(); it != free.rend(); ++it) out = Formula::forall(*it, std::move(out));
  return out;
}

}  // namespace hhtkit

namespace hhtkit {

namespace {

using Stack = std::vector<Variable>;

// Position of the innermost binder of v, counted from the top of the stack.
std::optional<std::size_t> binder_depth(const Stack& s, const Variable& v) {
  for (std::size_t k = s.size(); k-- > 0;)
    if (s[k] == v) return s.size() - 1 - k;
  return std::nullopt;
}

bool same_variable(const Stack& sa, const Variable& a, const Stack& sb, const Variable& b) {
  if (a.sort != b.sort || a.arity != b.arity) return false;
  auto da = binder_depth(sa, a);
  auto db = binder_depth(sb, b);
  if (da || db) return da == db;
  return a.name == b.name;
}

bool alpha_terms(const Term& a, const Stack& sa, const Term& b, const Stack& sb) {
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: return same_variable(sa, Variable::object(a.name()), sb, Variable::object(b.name()));
    case Term::Kind::Function:
      if (a.name() != b.name()) return false;
      break;
    case Term::Kind::FunctionVariable:
      if (!same_variable(sa, Variable::function(a.name(), a.arity()), sb, Variable::function(b.name(), b.arity())))
        return false;
      break;
  }
  for (std::size_t k = 0; k < a.args().size(); ++k)
    if (!alpha_terms(a.args()[k], sa, b.args()[k], sb)) return false;
  return true;
}

bool alpha(const Formula& a, Stack& sa, const Formula& b, Stack& sb) {
  using K = Formula::Kind;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Bot: return true;
    case K::Equal:
      return alpha_terms(a.left_term(), sa, b.left_term(), sb) && alpha_terms(a.right_term(), sa, b.right_term(), sb);
    case K::Atom: {
      if (a.is_predicate_variable() != b.is_predicate_variable() || a.args().size() != b.args().size()) return false;
      if (a.is_predicate_variable()) {
        if (!same_variable(sa, a.predicate_variable(), sb, b.predicate_variable())) return false;
      } else if (a.predicate() != b.predicate()) {
        return false;
      }
      for (std::size_t k = 0; k < a.args().size(); ++k)
        if (!alpha_terms(a.args()[k], sa, b.args()[k], sb)) return false;
      return true;
    }
    case K::And:
    case K::Or:
    case K::Implies: return alpha(a.lhs(), sa, b.lhs(), sb) && alpha(a.rhs(), sa, b.rhs(), sb);
    case K::Forall:
    case K::Exists: {
      if (a.binders().size() != b.binders().size()) return false;
      for (std::size_t k = 0; k < a.binders().size(); ++k) {
        const auto& x = a.binders()[k];
        const auto& y = b.binders()[k];
        if (x.var.sort != y.var.sort || x.var.arity != y.var.arity || x.restrictor != y.restrictor) return false;
      }
      for (const auto& x : a.binders()) sa.push_back(x.var);
      for (const auto& y : b.binders()) sb.push_back(y.var);
      const bool r = alpha(a.body(), sa, b.body(), sb);
      sa.resize(sa.size() - a.binders().size());
      sb.resize(sb.size() - b.binders().size());
      return r;
    }
  }
  return false;
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  if (a == b) return true;
  Stack sa, sb;
  return alpha(a, sa, b, sb);
}

}  // namespace hhtkit
