#include "hhtkit/herbrand.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "hhtkit/error.hpp"
#include "hhtkit/transform.hpp"

namespace hhtkit::herbrand {

std::uint64_t default_budget() {
  const char* env = std::getenv("HHTKIT_BUDGET");
  if (!env) return kDefaultBudget;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *ptr != '\0' || v == 0) return kDefaultBudget;
  return v;
}

Interpretation::Interpretation(std::set<GroundAtom> here, std::set<GroundAtom> there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(), here_.end()))
    throw std::invalid_argument("Herbrand HT-interpretation requires J^h to be a subset of J^t");
}

AtomState Interpretation::state(const GroundAtom& a) const {
  if (here_.contains(a)) return AtomState::Both;
  if (there_.contains(a)) return AtomState::ThereOnly;
  return AtomState::Absent;
}

std::string compact(const GroundAtom& a) {
  std::string s = a.to_string();
  std::erase(s, ' ');
  return s;
}

namespace {

using K = Formula::Kind;
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    r = sat_mul(r, base);
    if (r == kMax) break;
  }
  return r;
}

void collect_predicates(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case K::Bot:
    case K::Equal: return;
    case K::Atom:
      if (!f.is_predicate_variable()) out.push_back(f.predicate());
      return;
    case K::And:
    case K::Or:
    case K::Implies:
      collect_predicates(f.lhs(), out);
      collect_predicates(f.rhs(), out);
      return;
    case K::Forall:
    case K::Exists:
      for (const auto& b : f.binders())
        if (!b.restrictor.empty()) out.push_back(b.restrictor);
      collect_predicates(f.body(), out);
      return;
  }
}

struct HT {
  bool h;
  bool t;
};

}  // namespace

// Structure for Sigma predicates: one state per tuple of U^n.
using Structure = std::map<std::string, std::vector<AtomState>, std::less<>>;

// One evaluation pass. Term values are integer ids: positions in the universe,
// then (bounded mode only) terms outside the truncated universe, interned on demand.
class Evaluation {
 public:
  Evaluation(const Evaluator& ev, const Structure& s, const Names& names) : ev_(ev), s_(s) {
    for (const auto& [n, f] : names.functions) funcs_.emplace_back(n, &f);
    for (const auto& [n, p] : names.predicates) preds_.emplace_back(n, &p);
  }

  int term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        for (auto it = objs_.rbegin(); it != objs_.rend(); ++it)
          if (it->first == t.name()) return it->second;
        throw Error("unbound object variable " + t.name());
      case Term::Kind::Function: {
        std::vector<int> args;
        args.reserve(t.args().size());
        for (const auto& a : t.args()) args.push_back(term(a));
        return apply(t.name(), std::move(args));
      }
      case Term::Kind::FunctionVariable: {
        const FunctionName* fn = nullptr;
        for (auto it = funcs_.rbegin(); it != funcs_.rend(); ++it)
          if (it->first == t.name()) {
            fn = it->second;
            break;
          }
        if (!fn) throw Error("no function name for variable " + t.name());
        std::size_t idx = 0;
        for (const auto& a : t.args()) {
          const int v = term(a);
          if (v >= universe_size())
            throw Error("function name " + t.name() + " applied outside the truncated universe");
          idx = idx * universe_size() + static_cast<std::size_t>(v);
        }
        return fn->table.at(idx);
      }
    }
    return 0;
  }

  Term term_of(int id) const {
    if (id < universe_size()) return ev_.universe_[id];
    return extra_[id - universe_size()];
  }

  HT eval(const Formula& f) {
    switch (f.kind()) {
      case K::Bot: return {false, false};
      case K::Equal: {
        const bool v = term(f.left_term()) == term(f.right_term());
        return {v, v};
      }
      case K::Atom: return atom(f);
      case K::And: {
        HT a = eval(f.lhs());
        if (!a.t) return {false, false};
        HT b = eval(f.rhs());
        return {a.h && b.h, a.t && b.t};
      }
      case K::Or: {
        HT a = eval(f.lhs());
        if (a.h) return {true, true};
        HT b = eval(f.rhs());
        return {a.h || b.h, a.t || b.t};
      }
      case K::Implies: {
        HT a = eval(f.lhs());
        HT b = eval(f.rhs());
        const bool t = !a.t || b.t;
        return {(!a.h || b.h) && t, t};
      }
      case K::Forall:
      case K::Exists: return quantifier(f);
    }
    return {false, false};
  }

 private:
  int universe_size() const { return static_cast<int>(ev_.universe_.size()); }

  int apply(const std::string& fn, std::vector<int> args) {
    auto key = std::make_pair(fn, args);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<Term> targs;
    for (int a : args) targs.push_back(term_of(a));
    Term t = Term::function(fn, std::move(targs));
    int id;
    if (auto it = ev_.index_.find(t.to_string()); it != ev_.index_.end()) {
      id = static_cast<int>(it->second);
    } else {
      id = universe_size() + static_cast<int>(extra_.size());
      extra_.push_back(std::move(t));
    }
    cache_.emplace(std::move(key), id);
    return id;
  }

  // Tuple index over U^n, or nullopt when some argument lies outside the universe.
  std::optional<std::size_t> tuple(const std::vector<Term>& args) {
    std::size_t idx = 0;
    bool inside = true;
    for (const auto& a : args) {
      const int v = term(a);
      if (v >= universe_size()) inside = false;
      idx = idx * universe_size() + static_cast<std::size_t>(v);
    }
    if (!inside) return std::nullopt;
    return idx;
  }

  HT atom(const Formula& f) {
    auto idx = tuple(f.args());
    if (f.is_predicate_variable()) {
      const PredicateName* p = nullptr;
      for (auto it = preds_.rbegin(); it != preds_.rend(); ++it)
        if (it->first == f.predicate()) {
          p = it->second;
          break;
        }
      if (!p) throw Error("no predicate name for variable " + f.predicate());
      if (!idx) return {false, false};
      return {p->holds(World::Here, *idx), p->holds(World::There, *idx)};
    }
    if (!idx) return {false, false};
    auto it = s_.find(f.predicate());
    if (it == s_.end()) return {false, false};
    const AtomState st = it->second[*idx];
    return {st == AtomState::Both, st != AtomState::Absent};
  }

  template <class Visit>
  HT fold(bool universal, Visit&& each) {
    HT acc = universal ? HT{true, true} : HT{false, false};
    each([&](HT v) {
      if (universal) {
        acc = {acc.h && v.h, acc.t && v.t};
        return acc.t;  // keep going while something can still change
      }
      acc = {acc.h || v.h, acc.t || v.t};
      return !acc.h;
    });
    return acc;
  }

  HT quantifier(const Formula& f) {
    const bool universal = f.kind() == K::Forall;
    const Variable& v = f.bound();
    const int u = universe_size();
    switch (v.sort) {
      case VarSort::Object:
        return fold(universal, [&](auto&& step) {
          for (int k = 0; k < u; ++k) {
            objs_.emplace_back(v.name, k);
            const HT r = eval(f.body());
            objs_.pop_back();
            if (!step(r)) return;
          }
        });
      case VarSort::Function:
        return fold(universal, [&](auto&& step) {
          FunctionName fn{v.arity, std::vector<int>(static_cast<std::size_t>(sat_pow(u, v.arity)), 0)};
          funcs_.emplace_back(v.name, &fn);
          while (true) {
            const HT r = eval(f.body());
            if (!step(r)) break;
            std::size_t pos = fn.table.size();
            while (pos > 0 && ++fn.table[pos - 1] == u) fn.table[--pos] = 0;
            if (pos == 0) break;
          }
          funcs_.pop_back();
        });
      case VarSort::Predicate:
        return fold(universal, [&](auto&& step) {
          PredicateName pn{v.arity, std::vector<AtomState>(static_cast<std::size_t>(sat_pow(u, v.arity)),
                                                           AtomState::Absent)};
          preds_.emplace_back(v.name, &pn);
          while (true) {
            const HT r = eval(f.body());
            if (!step(r)) break;
            std::size_t pos = pn.extension.size();
            while (pos > 0) {
              auto& s = pn.extension[pos - 1];
              if (s == AtomState::Both) {
                s = AtomState::Absent;
                --pos;
                continue;
              }
              s = s == AtomState::Absent ? AtomState::ThereOnly : AtomState::Both;
              break;
            }
            if (pos == 0) break;
          }
          preds_.pop_back();
        });
    }
    return {false, false};
  }

  const Evaluator& ev_;
  const Structure& s_;
  std::vector<std::pair<std::string, int>> objs_;
  std::vector<std::pair<std::string, const FunctionName*>> funcs_;
  std::vector<std::pair<std::string, const PredicateName*>> preds_;
  std::map<std::pair<std::string, std::vector<int>>, int> cache_;
  std::vector<Term> extra_;
};

Evaluator::Evaluator(Signature sig, InstantiationMode mode)
    : sig_(std::move(sig)), mode_(mode), universe_(herbrand_universe(sig_, mode)) {
  for (std::size_t k = 0; k < universe_.size(); ++k) index_.emplace(universe_[k].to_string(), k);
}

std::vector<std::string> Evaluator::predicates_of(const Formula& f) {
  std::vector<std::string> out;
  collect_predicates(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroundAtom> Evaluator::herbrand_base(const std::vector<std::string>& predicates) const {
  std::vector<GroundAtom> out;
  const std::size_t u = universe_.size();
  for (const auto& p : sig_.predicates()) {
    if (!predicates.empty() && std::find(predicates.begin(), predicates.end(), p.name) == predicates.end()) continue;
    const std::uint64_t count = sat_pow(u, p.arity);
    if (count > 10000000) throw BudgetExceeded("Herbrand base of " + p.name, count, 10000000);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      GroundAtom a{p.name, std::vector<Term>(p.arity, universe_.empty() ? Term::constant("?") : universe_[0])};
      std::uint64_t rest = idx;
      for (int k = p.arity; k-- > 0;) {
        a.args[k] = universe_[rest % u];
        rest /= u;
      }
      out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end(), [](const GroundAtom& x, const GroundAtom& y) { return compact(x) < compact(y); });
  return out;
}

Term Evaluator::hat_eval(const Term& t, const Names& names) const {
  Structure empty;
  Evaluation e(*this, empty, names);
  return e.term_of(e.term(t));
}

std::uint64_t Evaluator::cost(const Formula& f) const {
  const std::uint64_t u = universe_.size();
  switch (f.kind()) {
    case K::Bot:
    case K::Equal:
    case K::Atom: return 1;
    case K::And:
    case K::Or:
    case K::Implies: return sat_add(1, sat_add(cost(f.lhs()), cost(f.rhs())));
    case K::Forall:
    case K::Exists: {
      std::uint64_t range = 1;
      for (const auto& b : f.binders()) {
        switch (b.var.sort) {
          case VarSort::Object: range = sat_mul(range, u); break;
          case VarSort::Function: range = sat_mul(range, sat_pow(u, sat_pow(u, b.var.arity))); break;
          case VarSort::Predicate: range = sat_mul(range, sat_pow(3, sat_pow(u, b.var.arity))); break;
        }
      }
      return sat_add(1, sat_mul(std::max<std::uint64_t>(range, 1), cost(f.body())));
    }
  }
  return 1;
}

namespace {

Structure structure_of(const Evaluator& ev, const Interpretation& j) {
  Structure s;
  const std::size_t u = ev.universe().size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < u; ++k) pos.emplace(ev.universe()[k].to_string(), k);
  for (const auto& p : ev.signature().predicates())
    s.emplace(p.name, std::vector<AtomState>(static_cast<std::size_t>(sat_pow(u, p.arity)), AtomState::Absent));
  for (const auto& a : j.there()) {
    auto it = s.find(a.predicate);
    if (it == s.end()) continue;
    std::size_t idx = 0;
    bool inside = true;
    for (const auto& t : a.args) {
      auto p = pos.find(t.to_string());
      if (p == pos.end()) {
        inside = false;
        break;
      }
      idx = idx * u + p->second;
    }
    if (!inside || idx >= it->second.size()) continue;
    it->second[idx] = j.here().contains(a) ? AtomState::Both : AtomState::ThereOnly;
  }
  return s;
}

Formula prepared(const Formula& f, const Names& names) {
  VariableSet free = free_variables(f);
  for (const auto& v : free) {
    const bool named = (v.sort == VarSort::Function && names.functions.contains(v.name)) ||
                       (v.sort == VarSort::Predicate && names.predicates.contains(v.name));
    if (!named) throw Error("Herbrand evaluation needs a closed formula; " + v.to_string() + " is free");
  }
  return has_restrictors(f) ? eliminate_restrictors(f) : f;
}

}  // namespace

bool Evaluator::satisfies(const Interpretation& j, World w, const Formula& f, const Names& names,
                          std::uint64_t budget) const {
  const Formula g = prepared(f, names);
  const std::uint64_t c = cost(g);
  if (c > budget) throw BudgetExceeded("Herbrand evaluation", c, budget);
  const Structure s = structure_of(*this, j);
  Evaluation e(*this, s, names);
  const HT r = e.eval(g);
  return w == World::Here ? r.h : r.t;
}

ValidityResult hht_valid_bruteforce(const Signature& sig, const Formula& f, std::uint64_t budget,
                                    InstantiationMode mode) {
  const Evaluator ev(sig, mode);
  const Formula g = prepared(f, {});
  ValidityResult res;
  res.approximate = !mode.is_exact();
  res.base = ev.herbrand_base(Evaluator::predicates_of(g));
  const std::size_t n = res.base.size();
  res.estimated_cost = sat_mul(sat_pow(3, n), ev.cost(g));
  if (res.estimated_cost > budget) throw BudgetExceeded("Herbrand brute-force check", res.estimated_cost, budget);

  // Base atom k lives at slot (predicate, tuple index) of the structure.
  Structure s;
  const std::size_t u = ev.universe().size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t k = 0; k < u; ++k) pos.emplace(ev.universe()[k].to_string(), k);
  std::vector<std::pair<std::vector<AtomState>*, std::size_t>> slot;
  for (const auto& p : sig.predicates())
    s.emplace(p.name, std::vector<AtomState>(static_cast<std::size_t>(sat_pow(u, p.arity)), AtomState::Absent));
  for (const auto& a : res.base) {
    std::size_t idx = 0;
    for (const auto& t : a.args) idx = idx * u + pos.at(t.to_string());
    slot.emplace_back(&s.at(a.predicate), idx);
  }

  Evaluation e(ev, s, {});
  std::vector<int> digits(n, 0);
  const std::uint64_t total = sat_pow(3, n);
  for (std::uint64_t index = 0; index < total; ++index) {
    if (!e.eval(g).h) {
      std::set<GroundAtom> here, there;
      for (std::size_t k = 0; k < n; ++k) {
        if (digits[k] >= 1) there.insert(res.base[k]);
        if (digits[k] == 2) here.insert(res.base[k]);
      }
      res.valid = false;
      res.index = index;
      res.countermodel = Interpretation(std::move(here), std::move(there));
      return res;
    }
    for (std::size_t k = n; k-- > 0;) {
      auto& [vec, idx] = slot[k];
      if (digits[k] < 2) {
        ++digits[k];
        (*vec)[idx] = digits[k] == 1 ? AtomState::ThereOnly : AtomState::Both;
        break;
      }
      digits[k] = 0;
      (*vec)[idx] = AtomState::Absent;
    }
  }
  return res;
}

Interpretation lift(const Substitution& psi, const ht::Interpretation& i) {
  const Evaluator ev(psi.signature());
  std::set<GroundAtom> here, there;
  for (const auto& a : ev.herbrand_base()) {
    const PropFormula v = psi.lookup(a);
    if (ht::satisfies(i, World::There, v)) there.insert(a);
    if (ht::satisfies(i, World::Here, v)) here.insert(a);
  }
  return Interpretation(std::move(here), std::move(there));
}

bool lifting_check(const Substitution& psi, const ht::Interpretation& i, const Formula& f) {
  const Interpretation j = lift(psi, i);
  const PropFormula inst = instantiate(psi, f, InstantiationMode::exact());
  const Evaluator ev(psi.signature());
  for (World w : {World::Here, World::There})
    if (ev.satisfies(j, w, f, {}, std::numeric_limits<std::uint64_t>::max()) != ht::satisfies(i, w, inst))
      return false;
  return true;
}

std::string render(const Interpretation& j, const std::vector<GroundAtom>& base) {
  std::vector<std::pair<std::string, AtomState>> rows;
  for (const auto& a : base) rows.emplace_back(compact(a), j.state(a));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [name, st] : rows) out += name + ": " + ht::state_name(st) + "\n";
  return out;
}

}  // namespace hhtkit::herbrand
