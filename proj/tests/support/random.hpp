// Seeded generators shared by the unit and acceptance tests.
#ifndef HHTKIT_TESTS_RANDOM_HPP
#define HHTKIT_TESTS_RANDOM_HPP

#include <random>
#include <string>
#include <vector>

#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/prop.hpp"
#include "hhtkit/signature.hpp"
#include "hhtkit/syntax.hpp"

namespace hhtkit::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> atom_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('p' + i)));
  return out;
}

inline PropFormula random_prop(Rng& rng, const std::vector<std::string>& atoms, int depth) {
  if (depth == 0 || coin(rng, 0.25)) {
    int k = pick(rng, static_cast<int>(atoms.size()) + 2);
    if (k == static_cast<int>(atoms.size())) return PropFormula::bot();
    if (k == static_cast<int>(atoms.size()) + 1) return coin(rng) ? PropFormula::top() : PropFormula::atom(atoms[0]);
    return PropFormula::atom(atoms[k]);
  }
  switch (pick(rng, 4)) {
    case 0:
      return PropFormula::implies(random_prop(rng, atoms, depth - 1), random_prop(rng, atoms, depth - 1));
    case 1:
      return PropFormula::neg(random_prop(rng, atoms, depth - 1));
    default: {
      std::vector<PropFormula> kids;
      int n = pick(rng, 4);
      for (int i = 0; i < n; ++i) kids.push_back(random_prop(rng, atoms, depth - 1));
      return coin(rng) ? PropFormula::conj(kids) : PropFormula::disj(kids);
    }
  }
}

inline ht::Interpretation random_interpretation(Rng& rng, const std::vector<std::string>& atoms) {
  std::set<std::string> here, there;
  for (const auto& a : atoms) {
    int s = pick(rng, 3);
    if (s >= 1) there.insert(a);
    if (s == 2) here.insert(a);
  }
  return ht::Interpretation(here, there);
}

// Random first-order formula over `sig` whose free variables are among
// `scope`. Quantifiers bind x, y or z; restricted quantifiers appear when
// `restrictors` is set and the signature has some.
class FormulaGen {
 public:
  FormulaGen(const Signature& sig, bool restrictors = false, bool equality = true)
      : sig_(sig), restrictors_(restrictors && !sig.restrictors().empty()), equality_(equality) {
    for (const auto& c : sig.object_constants()) constants_.push_back(c);
    for (const auto& p : sig.predicates())
      if (!sig.is_restrictor(p.name)) predicates_.push_back(p);
  }

  Term term(Rng& rng, const std::vector<Variable>& scope) const {
    int n = static_cast<int>(scope.size());
    if (n > 0 && coin(rng, 0.6)) return Term::variable(scope[pick(rng, n)].name);
    return Term::constant(constants_[pick(rng, static_cast<int>(constants_.size()))]);
  }

  Formula atom(Rng& rng, const std::vector<Variable>& scope) const {
    int k = pick(rng, 10);
    if (k == 0) return Formula::bot();
    if (k == 1 && equality_) return Formula::equal(term(rng, scope), term(rng, scope));
    const SymbolDecl& p = predicates_[pick(rng, static_cast<int>(predicates_.size()))];
    std::vector<Term> args;
    for (int i = 0; i < p.arity; ++i) args.push_back(term(rng, scope));
    return Formula::atom(p.name, args);
  }

  Formula formula(Rng& rng, int depth, std::vector<Variable> scope) const {
    if (depth == 0 || coin(rng, 0.2)) return atom(rng, scope);
    int k = pick(rng, 9);
    if (k <= 4) {
      static const Formula::Kind kinds[] = {Formula::Kind::And, Formula::Kind::Or, Formula::Kind::Implies,
                                            Formula::Kind::Implies, Formula::Kind::And};
      return Formula::binary(kinds[k], formula(rng, depth - 1, scope), formula(rng, depth - 1, scope));
    }
    const auto q = coin(rng) ? Formula::Kind::Forall : Formula::Kind::Exists;
    static const char* names[] = {"x", "y", "z"};
    if (restrictors_ && k >= 7) {
      std::vector<Binder> binders;
      int n = 1 + pick(rng, 2);
      const auto& rs = sig_.restrictors();
      for (int i = 0; i < n; ++i) {
        Variable v = Variable::object(names[(i + pick(rng, 3)) % 3]);
        bool dup = false;
        for (const auto& b : binders) dup = dup || b.var == v;
        if (dup) continue;
        binders.push_back({v, rs[pick(rng, static_cast<int>(rs.size()))]});
        scope.push_back(v);
      }
      return Formula::quantifier(q, binders, formula(rng, depth - 1, scope));
    }
    Variable v = Variable::object(names[pick(rng, 3)]);
    scope.push_back(v);
    return Formula::quantifier(q, {Binder{v, {}}}, formula(rng, depth - 1, scope));
  }

  Formula closed(Rng& rng, int depth) const { return formula(rng, depth, {}); }

 private:
  const Signature& sig_;
  bool restrictors_;
  bool equality_;
  std::vector<std::string> constants_;
  std::vector<SymbolDecl> predicates_;
};

// psi over the full Herbrand base of a nullary-only signature: restrictor
// atoms get top or bot, other atoms random formulas over `atoms`.
inline Substitution random_substitution(Rng& rng, const Signature& sig, const std::vector<std::string>& atoms,
                                        int depth) {
  Substitution psi(sig);
  const auto consts = sig.object_constants();
  for (const auto& p : sig.predicates()) {
    std::vector<std::vector<Term>> tuples{{}};
    for (int i = 0; i < p.arity; ++i) {
      std::vector<std::vector<Term>> next;
      for (const auto& t : tuples)
        for (const auto& c : consts) {
          auto u = t;
          u.push_back(Term::constant(c));
          next.push_back(u);
        }
      tuples = std::move(next);
    }
    for (const auto& args : tuples) {
      GroundAtom a{p.name, args};
      if (sig.is_restrictor(p.name))
        psi.set(a, coin(rng) ? PropFormula::top() : PropFormula::bot());
      else
        psi.set(a, random_prop(rng, atoms, depth));
    }
  }
  return psi;
}

}  // namespace hhtkit::testing

#endif  // HHTKIT_TESTS_RANDOM_HPP
