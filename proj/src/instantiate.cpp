#include "hhtkit/instantiate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "hhtkit/parser.hpp"
#include "hhtkit/transform.hpp"

namespace hhtkit {

std::string GroundAtom::to_string() const {
  std::string out = predicate;
  if (!args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      out += args[i].to_string();
    }
    out += ')';
  }
  return out;
}

std::strong_ordering operator<=>(const GroundAtom& a, const GroundAtom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

const char* kind_name(InstantiationError::Kind k) {
  switch (k) {
    case InstantiationError::Kind::NotClosed: return "NotClosed";
    case InstantiationError::Kind::NotFirstOrder: return "NotFirstOrder";
    case InstantiationError::Kind::UnmappedAtom: return "UnmappedAtom";
    case InstantiationError::Kind::InfiniteUniverse: return "InfiniteUniverse";
  }
  return "InstantiationError";
}

InstantiationMode InstantiationMode::bounded(int depth) {
  if (depth < 0) throw std::invalid_argument("bounded instantiation depth must be non-negative");
  return InstantiationMode(depth);
}

std::string InstantiationMode::to_string() const {
  return is_exact() ? "exact" : "bounded(depth " + std::to_string(depth_) + ")";
}

std::vector<Term> herbrand_universe(const Signature& sig, InstantiationMode mode, std::uint64_t max_terms) {
  std::vector<Term> out;
  for (const auto& c : sig.object_constants()) out.push_back(Term::constant(c));
  if (mode.is_exact()) {
    if (!sig.all_nullary())
      throw InstantiationError(InstantiationError::Kind::InfiniteUniverse,
                               "exact instantiation needs a finite Herbrand universe, but the signature has "
                               "function constants of positive arity");
    return out;
  }
  std::size_t prev_end = 0;  // terms of depth < k occupy [0, level_start)
  for (int k = 1; k <= mode.depth(); ++k) {
    const std::size_t level_start = out.size();
    for (const auto& fn : sig.functions()) {
      if (fn.arity == 0) continue;
      // Tuples over [0, level_start) with at least one component of depth k-1.
      std::vector<std::size_t> idx(fn.arity, 0);
      while (true) {
        const bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= prev_end; });
        if (fresh) {
          if (out.size() >= max_terms) throw BudgetExceeded("bounded Herbrand universe", out.size() + 1, max_terms);
          std::vector<Term> args;
          for (auto i : idx) args.push_back(out[i]);
          out.push_back(Term::function(fn.name, std::move(args)));
        }
        int pos = fn.arity - 1;
        while (pos >= 0 && ++idx[pos] == level_start) idx[pos--] = 0;
        if (pos < 0) break;
      }
    }
    prev_end = level_start;
  }
  return out;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(Signature sig) : sig_(std::move(sig)) {}

void Substitution::check_value(const std::string& predicate, const PropFormula& value) const {
  if (sig_.is_restrictor(predicate) && !value.is_top() && !value.is_bot())
    throw SignatureError("restrictor " + predicate + " must be mapped to top or bot, not " + value.to_string());
}

void Substitution::set(GroundAtom atom, PropFormula value) {
  auto ar = sig_.predicate_arity(atom.predicate);
  if (!ar) throw SignatureError("'" + atom.predicate + "' is not a predicate constant of the signature");
  if (*ar != static_cast<int>(atom.args.size()))
    throw SignatureError("predicate " + atom.predicate + " has arity " + std::to_string(*ar));
  for (const auto& t : atom.args)
    if (!t.is_ground()) throw SignatureError("argument " + t.to_string() + " of " + atom.predicate + " is not ground");
  check_value(atom.predicate, value);
  entries_.insert_or_assign(std::move(atom), std::move(value));
}

void Substitution::set_default(const std::string& predicate, PropFormula value) {
  if (!sig_.predicate_arity(predicate))
    throw SignatureError("'" + predicate + "' is not a predicate constant of the signature");
  check_value(predicate, value);
  defaults_.insert_or_assign(predicate, std::move(value));
}

std::optional<PropFormula> Substitution::find(const GroundAtom& atom) const {
  if (auto it = entries_.find(atom); it != entries_.end()) return it->second;
  if (auto it = defaults_.find(atom.predicate); it != defaults_.end()) return it->second;
  return std::nullopt;
}

PropFormula Substitution::lookup(const GroundAtom& atom) const {
  if (auto v = find(atom)) return *v;
  throw InstantiationError(InstantiationError::Kind::UnmappedAtom,
                           "substitution does not map " + atom.to_string());
}

std::string Substitution::to_string() const {
  std::string out = sig_.to_string();
  for (const auto& [p, v] : defaults_) out += "default " + p + " := " + v.to_string() + ";\n";
  for (const auto& [a, v] : entries_) out += a.to_string() + " := " + v.to_string() + ";\n";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using K = Formula::Kind;

Term ground(const Term& t, const std::map<std::string, Term>& env) {
  switch (t.kind()) {
    case Term::Kind::Variable: return env.at(t.name());
    case Term::Kind::Function:
    case Term::Kind::FunctionVariable: {
      if (t.args().empty()) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(ground(a, env));
      return Term::function(t.name(), std::move(args));
    }
  }
  return t;
}

class Instantiator {
 public:
  Instantiator(const Substitution& psi, std::vector<Term> universe, std::set<GroundAtom>* missing)
      : psi_(psi), universe_(std::move(universe)), missing_(missing) {}

  PropFormula run(const Formula& f) { return inst(f); }

 private:
  PropFormula lookup(GroundAtom a) {
    if (!missing_) return psi_.lookup(a);
    if (auto v = psi_.find(a)) return *v;
    missing_->insert(std::move(a));
    return PropFormula::bot();
  }

  GroundAtom atom_of(const Formula& f) {
    GroundAtom a{f.predicate(), {}};
    a.args.reserve(f.args().size());
    for (const auto& t : f.args()) a.args.push_back(ground(t, env_));
    return a;
  }

  PropFormula inst(const Formula& f) {
    switch (f.kind()) {
      case K::Bot: return PropFormula::bot();
      case K::Equal:
        return ground(f.left_term(), env_) == ground(f.right_term(), env_) ? PropFormula::top() : PropFormula::bot();
      case K::Atom: return lookup(atom_of(f));
      case K::And: return PropFormula::conj({inst(f.lhs()), inst(f.rhs())});
      case K::Or: return PropFormula::disj({inst(f.lhs()), inst(f.rhs())});
      case K::Implies: return PropFormula::implies(inst(f.lhs()), inst(f.rhs()));
      case K::Forall:
      case K::Exists: {
        // Per-binder index sets: the whole universe, or the terms whose
        // restrictor image is top.
        std::vector<std::vector<const Term*>> ranges;
        for (const auto& b : f.binders()) {
          std::vector<const Term*> r;
          for (const auto& t : universe_)
            if (b.restrictor.empty() || lookup(GroundAtom{b.restrictor, {t}}).is_top()) r.push_back(&t);
          ranges.push_back(std::move(r));
        }
        std::vector<PropFormula> parts;
        std::map<std::string, Term> saved = env_;
        product(f, ranges, 0, parts);
        env_ = std::move(saved);
        return f.kind() == K::Forall ? PropFormula::conj(std::move(parts)) : PropFormula::disj(std::move(parts));
      }
    }
    return PropFormula::bot();
  }

  void product(const Formula& f, const std::vector<std::vector<const Term*>>& ranges, std::size_t k,
               std::vector<PropFormula>& parts) {
    if (k == ranges.size()) {
      parts.push_back(inst(f.body()));
      return;
    }
    const std::string& name = f.binders()[k].var.name;
    for (const Term* t : ranges[k]) {
      env_.insert_or_assign(name, *t);
      product(f, ranges, k + 1, parts);
    }
  }

  const Substitution& psi_;
  std::vector<Term> universe_;
  std::set<GroundAtom>* missing_;
  std::map<std::string, Term> env_;
};

void check_instantiable(const Formula& f) {
  if (!is_first_order(f))
    throw InstantiationError(InstantiationError::Kind::NotFirstOrder,
                             "substitutions are defined for first-order formulas only: " + f.to_string());
  if (!is_closed(f)) {
    std::string names;
    for (const auto& v : free_variables(f)) names += (names.empty() ? "" : ", ") + v.to_string();
    throw InstantiationError(InstantiationError::Kind::NotClosed, "formula has free variables: " + names);
  }
}

}  // namespace

PropFormula instantiate(const Substitution& psi, const Formula& f, InstantiationMode mode) {
  check_instantiable(f);
  Instantiator in(psi, herbrand_universe(psi.signature(), mode), nullptr);
  return in.run(f);
}

std::vector<GroundAtom> validate(const Substitution& psi, const Formula& f, InstantiationMode mode) {
  check_instantiable(f);
  std::set<GroundAtom> missing;
  Instantiator in(psi, herbrand_universe(psi.signature(), mode), &missing);
  in.run(f);
  return {missing.begin(), missing.end()};
}

// ---------------------------------------------------------------------------

Substitution parse_substitution(std::string_view text) {
  Parser p(text);
  Substitution psi(p.parse_signature_block());
  const Signature& sig = psi.signature();
  while (!p.at_end()) {
    const Token at = p.peek();
    try {
      if (p.accept("default")) {
        std::string name = p.expect_identifier("predicate");
        p.expect(":=");
        PropFormula v = p.parse_prop();
        p.expect(";");
        psi.set_default(name, std::move(v));
        continue;
      }
      GroundAtom atom{p.expect_identifier("predicate"), {}};
      if (p.accept("(")) {
        do {
          const Token term_at = p.peek();
          Term t = p.parse_term(sig);
          if (!t.is_ground()) p.fail_at(term_at, "'" + t.to_string() + "' is not a ground term of the signature");
          atom.args.push_back(std::move(t));
        } while (p.accept(","));
        p.expect(")");
      }
      p.expect(":=");
      PropFormula v = p.parse_prop();
      p.expect(";");
      if (psi.entries().contains(atom)) p.fail_at(at, "duplicate entry for " + atom.to_string());
      psi.set(std::move(atom), std::move(v));
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), at.line, at.column);
    }
  }
  return psi;
}

}  // namespace hhtkit
