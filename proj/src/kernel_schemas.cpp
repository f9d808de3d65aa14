// Axiom schemas of HHT, HHT2 and HHT2+DCA.
//
// Schemas whose instances are plain syntactic patterns (the propositional
// schemas, eq-refl, hosoi, sqht, dec-eq) are stored as formulas in which the
// metavariables F, G, H are 0-ary predicate variables, s and t are object
// variables standing for terms, and x stands for the bound variable. The
// remaining schemas involve substitution or signature-dependent shapes and are
// handled individually.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "hhtkit/kernel.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/transform.hpp"

namespace hhtkit::kernel {

namespace {

using K = Formula::Kind;
using MS = MetaSort;

struct SchemaDef {
  SchemaInfo info;
  const char* pattern;  // nullptr for individually handled schemas
};

const std::vector<SchemaDef>& table() {
  static const std::vector<SchemaDef> t = [] {
    const std::vector<std::pair<std::string, MS>> fgh = {{"F", MS::Formula}, {"G", MS::Formula}, {"H", MS::Formula}};
    const std::vector<std::pair<std::string, MS>> fg = {{"F", MS::Formula}, {"G", MS::Formula}};
    const std::vector<std::pair<std::string, MS>> xft = {{"x", MS::Object}, {"F", MS::Formula}, {"t", MS::Term}};
    const std::vector<std::pair<std::string, MS>> st = {{"s", MS::Term}, {"t", MS::Term}};
    std::vector<SchemaDef> v = {
        {{"k", Level::HHT, "F -> (G -> F)", fg}, "F -> (G -> F)"},
        {{"s", Level::HHT, "(F -> (G -> H)) -> ((F -> G) -> (F -> H))", fgh},
         "(F -> (G -> H)) -> ((F -> G) -> (F -> H))"},
        {{"and-e1", Level::HHT, "F & G -> F", fg}, "F & G -> F"},
        {{"and-e2", Level::HHT, "F & G -> G", fg}, "F & G -> G"},
        {{"and-i", Level::HHT, "F -> (G -> F & G)", fg}, "F -> (G -> F & G)"},
        {{"or-i1", Level::HHT, "F -> F | G", fg}, "F -> F | G"},
        {{"or-i2", Level::HHT, "G -> F | G", fg}, "G -> F | G"},
        {{"or-e", Level::HHT, "(F -> H) -> ((G -> H) -> (F | G -> H))", fgh},
         "(F -> H) -> ((G -> H) -> (F | G -> H))"},
        {{"efq", Level::HHT, "bot -> F", {{"F", MS::Formula}}}, "bot -> F"},
        {{"all-e", Level::HHT, "forall x F -> F[x:=t]  (t substitutable for x in F)", xft}, nullptr},
        {{"ex-i", Level::HHT, "F[x:=t] -> exists x F  (t substitutable for x in F)", xft}, nullptr},
        {{"eq-refl", Level::HHT, "t = t", {{"t", MS::Term}}}, "t = t"},
        {{"eq-subst", Level::HHT, "s = t -> (F[x:=s] -> F[x:=t])  (s, t substitutable for x in F)",
          {{"x", MS::Object}, {"F", MS::Formula}, {"s", MS::Term}, {"t", MS::Term}}},
         nullptr},
        {{"hosoi", Level::HHT, "F | (F -> G) | not G", fg}, "F | (F -> G) | not G"},
        {{"sqht", Level::HHT, "exists x (F -> forall x F)", {{"x", MS::Object}, {"F", MS::Formula}}},
         "exists x (F -> forall x F)"},
        {{"dec-eq", Level::HHT, "s = t | s != t", st}, "s = t | s != t"},
        {{"cet-distinct", Level::HHT, "f(s1..sn) != g(t1..tm)  (f, g distinct function constants)", st}, nullptr},
        {{"cet-inject", Level::HHT, "f(s1..sn) = f(t1..tn) -> s1 = t1 & ... & sn = tn  (n > 0)", st}, nullptr},
        {{"cet-acyclic", Level::HHT, "t != s  (t contains s and differs from it)", {{"t", MS::Term}, {"s", MS::Term}}},
         nullptr},
        {{"so-all-e", Level::HHT2, "forall v G -> G[v:=w]  (w of the sort and arity of v)",
          {{"v", MS::SecondOrder}, {"G", MS::Formula}, {"w", MS::SecondOrder}}},
         nullptr},
        {{"so-ex-i", Level::HHT2, "G[v:=w] -> exists v G  (w of the sort and arity of v)",
          {{"v", MS::SecondOrder}, {"G", MS::Formula}, {"w", MS::SecondOrder}}},
         nullptr},
        {{"so-all-abs", Level::HHT2, "forall p G -> G{p <= L}  (L = lambda x1..xn. F)",
          {{"p", MS::SecondOrder}, {"G", MS::Formula}, {"L", MS::Abstraction}}},
         nullptr},
        {{"comprehension", Level::HHT2, "exists p forall x1..xn (p(x1..xn) <-> F)  (p not free in F)",
          {{"p", MS::SecondOrder}, {"L", MS::Abstraction}}},
         nullptr},
        {{"choice", Level::HHT2,
          "forall x1..xn exists y p(x1..xn, y) -> exists f forall x1..xn p(x1..xn, f(x1..xn))  (n > 0)",
          {{"p", MS::Predicate}, {"f", MS::SecondOrder}}},
         nullptr},
        {{"dca", Level::HHT2_DCA, "forall p (C_f1(p) & ... & C_fk(p) -> forall x p(x))", {{"p", MS::SecondOrder}}},
         nullptr},
    };
    return v;
  }();
  return t;
}

int level_rank(Level l) { return static_cast<int>(l); }

[[noreturn]] void mismatch(int label, const std::string& id, const std::string& what) {
  throw ProofError(ErrorKind::SchemaMismatch, label, "axiom " + id, what);
}

[[noreturn]] void side(int label, const std::string& id, const std::string& what) {
  throw ProofError(ErrorKind::SideConditionViolation, label, "axiom " + id, what);
}

bool sort_matches(MS s, const BindingValue& v) {
  switch (s) {
    case MS::Formula: return std::holds_alternative<Formula>(v);
    case MS::Term: return std::holds_alternative<Term>(v);
    case MS::Object: return std::holds_alternative<Variable>(v) && std::get<Variable>(v).sort == VarSort::Object;
    case MS::SecondOrder: return std::holds_alternative<Variable>(v) && std::get<Variable>(v).second_order();
    case MS::Predicate: return std::holds_alternative<PredicateSymbol>(v);
    case MS::Abstraction: return std::holds_alternative<Abstraction>(v);
  }
  return false;
}

template <class T>
const T* get(const Bindings& b, const std::string& k) {
  auto it = b.find(k);
  return it == b.end() ? nullptr : std::get_if<T>(&it->second);
}

// ---------------------------------------------------------------------------
// Pattern schemas

class PatternMatcher {
 public:
  PatternMatcher(const SchemaInfo& info, Bindings& b) : info_(info), b_(b) {}

  MS sort_of(const std::string& name) const {
    for (const auto& [n, s] : info_.metavariables)
      if (n == name) return s;
    return MS::Abstraction;  // not a metavariable
  }
  bool is_formula_meta(const Formula& p) const {
    return p.kind() == K::Atom && p.is_predicate_variable() && p.args().empty() &&
           sort_of(p.predicate()) == MS::Formula;
  }

  bool match(const Formula& p, const Formula& f) {
    if (is_formula_meta(p)) return bind(p.predicate(), f);
    if (p.kind() != f.kind()) return false;
    switch (p.kind()) {
      case K::Bot: return true;
      case K::Equal: return match_term(p.left_term(), f.left_term()) && match_term(p.right_term(), f.right_term());
      case K::Atom: return p == f;
      case K::And:
      case K::Or:
      case K::Implies: return match(p.lhs(), f.lhs()) && match(p.rhs(), f.rhs());
      case K::Forall:
      case K::Exists:
        if (f.binders().size() != 1 || f.is_generalized() || f.bound().sort != VarSort::Object) return false;
        return bind(p.bound().name, f.bound()) && match(p.body(), f.body());
    }
    return false;
  }

  Formula build(const Formula& p, int label) const {
    if (is_formula_meta(p)) return need<Formula>(p.predicate(), label);
    switch (p.kind()) {
      case K::Bot:
      case K::Atom: return p;
      case K::Equal: return Formula::equal(build_term(p.left_term(), label), build_term(p.right_term(), label));
      case K::And:
      case K::Or:
      case K::Implies: return Formula::binary(p.kind(), build(p.lhs(), label), build(p.rhs(), label));
      case K::Forall:
      case K::Exists:
        return Formula::quantifier(p.kind(), {Binder{need<Variable>(p.bound().name, label), {}}},
                                   build(p.body(), label));
    }
    return p;
  }

 private:
  template <class T>
  T need(const std::string& name, int label) const {
    if (const T* v = get<T>(b_, name)) return *v;
    mismatch(label, info_.id, "binding for " + name + " is required");
  }

  bool bind(const std::string& name, BindingValue v) {
    auto [it, inserted] = b_.emplace(name, v);
    return inserted || it->second == v;
  }

  bool match_term(const Term& p, const Term& t) {
    if (p.is_variable() && sort_of(p.name()) == MS::Term) return bind(p.name(), t);
    return p == t;
  }

  Term build_term(const Term& p, int label) const {
    if (p.is_variable() && sort_of(p.name()) == MS::Term) return need<Term>(p.name(), label);
    return p;
  }

  const SchemaInfo& info_;
  Bindings& b_;
};

Formula pattern_formula(const SchemaDef& d) {
  static std::map<std::string, Formula> cache;
  static std::mutex m;
  std::lock_guard lock(m);
  auto it = cache.find(d.info.id);
  if (it == cache.end()) it = cache.emplace(d.info.id, parse_formula(d.pattern, Signature{})).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Helpers for the individually handled schemas

void subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const auto& a : t.args()) subterms(a, out);
}

void subterms(const Formula& f, std::vector<Term>& out) {
  switch (f.kind()) {
    case K::Bot: return;
    case K::Equal:
    case K::Atom:
      for (const auto& a : f.args()) subterms(a, out);
      return;
    case K::And:
    case K::Or:
    case K::Implies:
      subterms(f.lhs(), out);
      subterms(f.rhs(), out);
      return;
    case K::Forall:
    case K::Exists: subterms(f.body(), out); return;
  }
}

void used_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name());
  for (const auto& a : t.args()) used_names(a, out);
}

void used_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case K::Bot: return;
    case K::Equal:
    case K::Atom:
      if (f.kind() == K::Atom) out.insert(f.predicate());
      for (const auto& a : f.args()) used_names(a, out);
      return;
    case K::And:
    case K::Or:
    case K::Implies:
      used_names(f.lhs(), out);
      used_names(f.rhs(), out);
      return;
    case K::Forall:
    case K::Exists:
      for (const auto& b : f.binders()) out.insert(b.var.name);
      used_names(f.body(), out);
      return;
  }
}

std::string fresh_name(const std::set<std::string>& used, const Signature& sig, const std::string& base = "x") {
  for (int k = 0;; ++k) {
    std::string n = k == 0 ? base : base + std::to_string(k);
    if (!used.contains(n) && !sig.declares(n) && !is_reserved_word(n)) return n;
  }
}

// Anti-unification of a and b against the pair (s, t): positions where a has s
// and b has t become x; everything else must coincide.
std::optional<Term> anti_term(const Term& a, const Term& b, const Term& s, const Term& t, const Term& x) {
  if (a == b) return a;
  if (a == s && b == t) return x;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity() || a.is_variable()) return std::nullopt;
  std::vector<Term> args;
  for (std::size_t k = 0; k < a.args().size(); ++k) {
    auto r = anti_term(a.args()[k], b.args()[k], s, t, x);
    if (!r) return std::nullopt;
    args.push_back(*r);
  }
  return a.kind() == Term::Kind::Function ? Term::function(a.name(), std::move(args))
                                          : Term::function_variable(a.name(), std::move(args));
}

std::optional<Formula> anti_formula(const Formula& a, const Formula& b, const Term& s, const Term& t, const Term& x) {
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case K::Bot: return a;
    case K::Equal: {
      auto l = anti_term(a.left_term(), b.left_term(), s, t, x);
      auto r = anti_term(a.right_term(), b.right_term(), s, t, x);
      if (!l || !r) return std::nullopt;
      return Formula::equal(*l, *r);
    }
    case K::Atom: {
      if (a.predicate() != b.predicate() || a.is_predicate_variable() != b.is_predicate_variable() ||
          a.args().size() != b.args().size())
        return std::nullopt;
      std::vector<Term> args;
      for (std::size_t k = 0; k < a.args().size(); ++k) {
        auto r = anti_term(a.args()[k], b.args()[k], s, t, x);
        if (!r) return std::nullopt;
        args.push_back(*r);
      }
      return a.is_predicate_variable() ? Formula::predicate_variable_atom(a.predicate(), std::move(args))
                                       : Formula::atom(a.predicate(), std::move(args));
    }
    case K::And:
    case K::Or:
    case K::Implies: {
      auto l = anti_formula(a.lhs(), b.lhs(), s, t, x);
      auto r = anti_formula(a.rhs(), b.rhs(), s, t, x);
      if (!l || !r) return std::nullopt;
      return Formula::binary(a.kind(), *l, *r);
    }
    case K::Forall:
    case K::Exists: {
      if (a.binders() != b.binders()) return std::nullopt;
      auto body = anti_formula(a.body(), b.body(), s, t, x);
      if (!body) return std::nullopt;
      return Formula::quantifier(a.kind(), a.binders(), *body);
    }
  }
  return std::nullopt;
}

// t contains s at a position reached only through function constants, t != s.
bool sigma_context(const Term& t, const Term& s) {
  if (t.kind() != Term::Kind::Function) return false;
  for (const auto& a : t.args())
    if (a == s || sigma_context(a, s)) return true;
  return false;
}

// Picks, among candidate values, one for which build() reproduces target;
// substitutable candidates are preferred.
template <class T, class Build>
std::optional<T> choose(const std::vector<T>& candidates, const Formula& target, Build&& build) {
  std::optional<T> fallback;
  for (const auto& c : candidates) {
    SubstitutionResult r = build(c);
    if (!(r.result == target)) continue;
    if (r.substitutable) return c;
    if (!fallback) fallback = c;
  }
  return fallback;
}

// ---------------------------------------------------------------------------

Formula build_all_e(const std::string& id, Bindings& b, const std::optional<Formula>& target, int label) {
  const bool intro = id == "ex-i";
  if (target) {
    const Formula& f = *target;
    if (f.kind() != K::Implies) mismatch(label, id, "expected an implication");
    const Formula& q = intro ? f.rhs() : f.lhs();
    const Formula& inst = intro ? f.lhs() : f.rhs();
    if (q.kind() != (intro ? K::Exists : K::Forall) || q.is_generalized() || q.bound().sort != VarSort::Object)
      mismatch(label, id, intro ? "consequent must be exists x F" : "antecedent must be forall x F");
    b.emplace("x", q.bound());
    b.emplace("F", q.body());
    if (!b.contains("t")) {
      const Variable* x = get<Variable>(b, "x");
      const Formula* body = get<Formula>(b, "F");
      if (x && body) {
        std::vector<Term> cands;
        subterms(inst, cands);
        cands.push_back(Term::variable(x->name));
        auto t = choose(cands, inst, [&](const Term& c) { return substitute_term(*body, *x, c); });
        if (t) b.emplace("t", *t);
      }
    }
  }
  const Variable* x = get<Variable>(b, "x");
  const Formula* body = get<Formula>(b, "F");
  const Term* t = get<Term>(b, "t");
  if (!x || !body || !t) mismatch(label, id, "cannot determine x, F and t");
  SubstitutionResult r = substitute_term(*body, *x, *t);
  if (!r.substitutable)
    side(label, id, "term " + t->to_string() + " is not substitutable for " + x->name + " in " + body->to_string());
  return intro ? Formula::implies(r.result, Formula::exists(*x, *body))
               : Formula::implies(Formula::forall(*x, *body), r.result);
}

Formula build_eq_subst(const std::string& id, Bindings& b, const Signature& sig, const std::optional<Formula>& target,
                       int label) {
  if (target) {
    const Formula& f = *target;
    if (f.kind() != K::Implies || f.lhs().kind() != K::Equal || f.rhs().kind() != K::Implies)
      mismatch(label, id, "expected s = t -> (A -> B)");
    b.emplace("s", f.lhs().left_term());
    b.emplace("t", f.lhs().right_term());
    const Term* s = get<Term>(b, "s");
    const Term* t = get<Term>(b, "t");
    const Formula& a = f.rhs().lhs();
    const Formula& c = f.rhs().rhs();
    if (s && t && !b.contains("F")) {
      if (!b.contains("x")) {
        std::set<std::string> used;
        used_names(f, used);
        b.emplace("x", Variable::object(fresh_name(used, sig)));
      }
      if (const Variable* x = get<Variable>(b, "x"))
        if (auto g = anti_formula(a, c, *s, *t, Term::variable(x->name))) b.emplace("F", *g);
    } else if (s && t && !b.contains("x")) {
      if (const Formula* g = get<Formula>(b, "F")) {
        std::vector<Variable> cands;
        for (const auto& v : free_variables(*g))
          if (v.sort == VarSort::Object) cands.push_back(v);
        auto x = choose(cands, a, [&](const Variable& v) { return substitute_term(*g, v, *s); });
        if (x) b.emplace("x", *x);
      }
    }
  }
  const Variable* x = get<Variable>(b, "x");
  const Formula* g = get<Formula>(b, "F");
  const Term* s = get<Term>(b, "s");
  const Term* t = get<Term>(b, "t");
  if (!x || !g || !s || !t) mismatch(label, id, "cannot determine x, F, s and t");
  SubstitutionResult a = substitute_term(*g, *x, *s);
  SubstitutionResult c = substitute_term(*g, *x, *t);
  if (!a.substitutable || !c.substitutable)
    side(label, id, "terms " + s->to_string() + ", " + t->to_string() + " must be substitutable for " + x->name +
                        " in " + g->to_string());
  return Formula::implies(Formula::equal(*s, *t), Formula::implies(a.result, c.result));
}

Formula build_cet(const std::string& id, Bindings& b, const Signature& sig, const std::optional<Formula>& target,
                  int label) {
  if (target) {
    const Formula& f = *target;
    if (id == "cet-inject") {
      if (f.kind() != K::Implies || f.lhs().kind() != K::Equal) mismatch(label, id, "expected s = t -> ...");
      b.emplace("s", f.lhs().left_term());
      b.emplace("t", f.lhs().right_term());
    } else {
      if (!f.is_negation() || f.lhs().kind() != K::Equal) mismatch(label, id, "expected a disequality");
      b.emplace(id == "cet-acyclic" ? "t" : "s", f.lhs().left_term());
      b.emplace(id == "cet-acyclic" ? "s" : "t", f.lhs().right_term());
    }
  }
  const Term* s = get<Term>(b, "s");
  const Term* t = get<Term>(b, "t");
  if (!s || !t) mismatch(label, id, "cannot determine s and t");
  auto is_app = [&](const Term& u) { return u.kind() == Term::Kind::Function && sig.function_arity(u.name()); };
  if (id == "cet-distinct") {
    if (!is_app(*s) || !is_app(*t) || s->name() == t->name())
      side(label, id, "the two sides must be applications of distinct function constants");
    return Formula::not_equal(*s, *t);
  }
  if (id == "cet-inject") {
    if (!is_app(*s) || !is_app(*t) || s->name() != t->name())
      side(label, id, "both sides must be applications of the same function constant");
    if (s->arity() == 0) side(label, id, "function constant " + s->name() + " must have arity greater than 0");
    std::vector<Formula> eqs;
    for (int k = 0; k < s->arity(); ++k) eqs.push_back(Formula::equal(s->args()[k], t->args()[k]));
    return Formula::implies(Formula::equal(*s, *t), Formula::conj_all(eqs));
  }
  // cet-acyclic
  if (!sigma_context(*t, *s))
    side(label, id, t->to_string() + " must contain " + s->to_string() +
                        " under function constants of the signature and differ from it");
  return Formula::not_equal(*t, *s);
}

Formula build_so_elim(const std::string& id, Bindings& b, const std::optional<Formula>& target, int label) {
  const bool intro = id == "so-ex-i";
  if (target) {
    const Formula& f = *target;
    if (f.kind() != K::Implies) mismatch(label, id, "expected an implication");
    const Formula& q = intro ? f.rhs() : f.lhs();
    const Formula& inst = intro ? f.lhs() : f.rhs();
    if (q.kind() != (intro ? K::Exists : K::Forall) || !q.bound().second_order())
      mismatch(label, id, intro ? "consequent must be exists v G" : "antecedent must be forall v G");
    b.emplace("v", q.bound());
    b.emplace("G", q.body());
    const Variable* v = get<Variable>(b, "v");
    const Formula* g = get<Formula>(b, "G");
    if (!b.contains("w") && v && g) {
      std::vector<Variable> cands{*v};
      for (const auto& c : free_variables(inst))
        if (c.sort == v->sort && c.arity == v->arity) cands.push_back(c);
      auto w = choose(cands, inst, [&](const Variable& c) { return substitute_variable(*g, *v, c); });
      if (w) b.emplace("w", *w);
    }
  }
  const Variable* v = get<Variable>(b, "v");
  const Formula* g = get<Formula>(b, "G");
  const Variable* w = get<Variable>(b, "w");
  if (!v || !g || !w) mismatch(label, id, "cannot determine v, G and w");
  if (w->sort != v->sort || w->arity != v->arity)
    side(label, id, w->to_string() + " must be a variable of the same sort and arity as " + v->to_string());
  SubstitutionResult r = substitute_variable(*g, *v, *w);
  if (!r.substitutable) side(label, id, w->to_string() + " is not substitutable for " + v->to_string());
  return intro ? Formula::implies(r.result, Formula::exists(*v, *g))
               : Formula::implies(Formula::forall(*v, *g), r.result);
}

Formula build_so_abs(const std::string& id, Bindings& b, const std::optional<Formula>& target, int label) {
  if (target) {
    const Formula& f = *target;
    if (f.kind() != K::Implies || f.lhs().kind() != K::Forall || f.lhs().bound().sort != VarSort::Predicate)
      mismatch(label, id, "antecedent must be forall p G");
    b.emplace("p", f.lhs().bound());
    b.emplace("G", f.lhs().body());
  }
  const Variable* p = get<Variable>(b, "p");
  const Formula* g = get<Formula>(b, "G");
  const Abstraction* l = get<Abstraction>(b, "L");
  if (!p || !g) mismatch(label, id, "cannot determine p and G");
  if (!l) mismatch(label, id, "binding for L is required");
  if (p->sort != VarSort::Predicate) side(label, id, p->to_string() + " must be a predicate variable");
  if (static_cast<int>(l->params.size()) != p->arity)
    side(label, id, "abstraction has " + std::to_string(l->params.size()) + " parameters, " + p->to_string() +
                        " needs " + std::to_string(p->arity));
  SubstitutionResult r = substitute_predicate(*g, *p, l->params, l->body);
  if (!r.substitutable) side(label, id, "abstraction is not substitutable for " + p->to_string());
  return Formula::implies(Formula::forall(*p, *g), r.result);
}

Formula build_comprehension(const std::string& id, Bindings& b, const std::optional<Formula>& target, int label) {
  if (target && !b.contains("L")) {
    const Formula& f = *target;
    if (f.kind() != K::Exists || f.bound().sort != VarSort::Predicate) mismatch(label, id, "expected exists p ...");
    const Variable p = f.bound();
    b.emplace("p", p);
    const Formula* cur = &f.body();
    std::vector<Variable> xs;
    for (int k = 0; k < p.arity; ++k) {
      if (cur->kind() != K::Forall || cur->is_generalized() || cur->bound().sort != VarSort::Object)
        mismatch(label, id, "expected " + std::to_string(p.arity) + " universal object quantifiers");
      xs.push_back(cur->bound());
      cur = &cur->body();
    }
    if (cur->kind() != K::And || cur->lhs().kind() != K::Implies) mismatch(label, id, "expected an equivalence");
    b.emplace("L", Abstraction{xs, cur->lhs().rhs()});
  }
  if (target && !b.contains("p") && target->kind() == K::Exists) b.emplace("p", target->bound());
  const Variable* p = get<Variable>(b, "p");
  const Abstraction* l = get<Abstraction>(b, "L");
  if (!p || !l) mismatch(label, id, "cannot determine p and L");
  if (p->sort != VarSort::Predicate) side(label, id, p->to_string() + " must be a predicate variable");
  if (static_cast<int>(l->params.size()) != p->arity)
    side(label, id, "abstraction arity does not match " + p->to_string());
  if (occurs_free(l->body, *p)) side(label, id, p->to_string() + " must not be free in " + l->body.to_string());
  std::vector<Term> args;
  for (const auto& x : l->params) args.push_back(Term::variable(x.name));
  Formula body = Formula::iff(Formula::predicate_variable_atom(p->name, args), l->body);
  for (auto it = l->params.rbegin(); it != l->params.rend(); ++it) body = Formula::forall(*it, body);
  return Formula::exists(*p, body);
}

Formula make_atom(const PredicateSymbol& p, std::vector<Term> args) {
  return p.variable ? Formula::predicate_variable_atom(p.name, std::move(args)) : Formula::atom(p.name, std::move(args));
}

Formula build_choice(const std::string& id, Bindings& b, const Signature& sig, const std::optional<Formula>& target,
                     int label) {
  if (target) {
    const Formula& f = *target;
    if (f.kind() != K::Implies) mismatch(label, id, "expected an implication");
    const Formula* cur = &f.lhs();
    while (cur->kind() == K::Forall || cur->kind() == K::Exists) cur = &cur->body();
    if (cur->kind() != K::Atom) mismatch(label, id, "antecedent must end in an atom p(x1, ..., xn, y)");
    b.emplace("p", PredicateSymbol{cur->predicate(), static_cast<int>(cur->args().size()), cur->is_predicate_variable()});
    if (f.rhs().kind() == K::Exists && f.rhs().bound().sort == VarSort::Function) b.emplace("f", f.rhs().bound());
  }
  const PredicateSymbol* p = get<PredicateSymbol>(b, "p");
  const Variable* fn = get<Variable>(b, "f");
  if (!p || !fn) mismatch(label, id, "cannot determine p and f");
  const int n = p->arity - 1;
  if (n <= 0) side(label, id, "choice requires n > 0, i.e. p of arity at least 2");
  if (!p->variable && !sig.predicate_arity(p->name)) side(label, id, p->name + " is not a predicate of the signature");
  if (fn->sort != VarSort::Function || fn->arity != n)
    side(label, id, fn->to_string() + " must be a function variable of arity " + std::to_string(n));
  std::set<std::string> used{p->name, fn->name};
  std::vector<Variable> xs;
  std::vector<Term> xt;
  for (int k = 0; k <= n; ++k) {
    xs.push_back(Variable::object(fresh_name(used, sig, "x")));
    used.insert(xs.back().name);
    xt.push_back(Term::variable(xs.back().name));
  }
  Formula lhs = Formula::exists(xs[n], make_atom(*p, xt));
  std::vector<Term> head(xt.begin(), xt.begin() + n);
  std::vector<Term> rargs = head;
  rargs.push_back(Term::function_variable(fn->name, head));
  Formula rhs = make_atom(*p, rargs);
  for (int k = n; k-- > 0;) {
    lhs = Formula::forall(xs[k], lhs);
    rhs = Formula::forall(xs[k], rhs);
  }
  Formula out = Formula::implies(lhs, Formula::exists(*fn, rhs));
  if (target && alpha_equivalent(*target, out)) return *target;
  return out;
}

Formula build_dca(const std::string& id, Bindings& b, const Signature& sig, const std::optional<Formula>& target,
                  int label) {
  if (target && target->kind() == K::Forall && target->bound().second_order()) b.emplace("p", target->bound());
  const Variable* p = get<Variable>(b, "p");
  if (!p) mismatch(label, id, "expected forall p ...");
  if (p->sort != VarSort::Predicate || p->arity != 1) side(label, id, p->to_string() + " must be a predicate variable of arity 1");
  std::set<std::string> used{p->name};
  auto fresh = [&] {
    std::string n = fresh_name(used, sig, "x");
    used.insert(n);
    return Variable::object(n);
  };
  auto holds = [&](Term t) { return Formula::predicate_variable_atom(p->name, {std::move(t)}); };
  std::vector<Formula> closure;
  for (const auto& fn : sig.functions()) {
    if (fn.arity == 0) {
      closure.push_back(holds(Term::constant(fn.name)));
      continue;
    }
    std::vector<Variable> xs;
    std::vector<Term> xt;
    std::vector<Formula> pre;
    for (int k = 0; k < fn.arity; ++k) {
      xs.push_back(fresh());
      xt.push_back(Term::variable(xs.back().name));
      pre.push_back(holds(xt.back()));
    }
    Formula c = Formula::implies(Formula::conj_all(pre), holds(Term::function(fn.name, xt)));
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) c = Formula::forall(*it, c);
    closure.push_back(c);
    for (const auto& x : xs) used.erase(x.name);
  }
  const Variable x = fresh();
  Formula out = Formula::forall(
      *p, Formula::implies(Formula::conj_all(closure), Formula::forall(x, holds(Term::variable(x.name)))));
  if (target && alpha_equivalent(*target, out)) return *target;
  return out;
}

}  // namespace

std::vector<SchemaInfo> list_schemas(Level level) {
  std::vector<SchemaInfo> out;
  for (const auto& d : table())
    if (level_rank(d.info.level) <= level_rank(level)) out.push_back(d.info);
  return out;
}

const SchemaInfo* find_schema(std::string_view id) {
  for (const auto& d : table())
    if (d.info.id == id) return &d.info;
  return nullptr;
}

Formula instantiate_schema(const std::string& id, Bindings& bindings, const Signature& sig,
                           const std::optional<Formula>& target, int label) {
  const SchemaDef* def = nullptr;
  for (const auto& d : table())
    if (d.info.id == id) def = &d;
  if (!def) mismatch(label, id, "unknown axiom schema '" + id + "'");

  for (const auto& [name, value] : bindings) {
    auto it = std::find_if(def->info.metavariables.begin(), def->info.metavariables.end(),
                           [&](const auto& m) { return m.first == name; });
    if (it == def->info.metavariables.end()) mismatch(label, id, "schema has no metavariable " + name);
    if (!sort_matches(it->second, value)) mismatch(label, id, "binding for " + name + " has the wrong sort");
  }

  Formula built = [&]() -> Formula {
    if (def->pattern) {
      const Formula pattern = pattern_formula(*def);
      PatternMatcher m(def->info, bindings);
      if (target && !m.match(pattern, *target))
        mismatch(label, id, "line does not have the shape " + def->info.shape);
      return m.build(pattern, label);
    }
    if (id == "all-e" || id == "ex-i") return build_all_e(id, bindings, target, label);
    if (id == "eq-subst") return build_eq_subst(id, bindings, sig, target, label);
    if (id.starts_with("cet-")) return build_cet(id, bindings, sig, target, label);
    if (id == "so-all-e" || id == "so-ex-i") return build_so_elim(id, bindings, target, label);
    if (id == "so-all-abs") return build_so_abs(id, bindings, target, label);
    if (id == "comprehension") return build_comprehension(id, bindings, target, label);
    if (id == "choice") return build_choice(id, bindings, sig, target, label);
    return build_dca(id, bindings, sig, target, label);
  }();

  if (target && !(built == *target))
    mismatch(label, id, "line is not the instance " + built.to_string() + " of " + def->info.shape);
  return built;
}

}  // namespace hhtkit::kernel
