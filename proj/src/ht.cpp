#include "hhtkit/ht.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hhtkit/error.hpp"

namespace hhtkit::ht {

const char* state_name(AtomState s) {
  switch (s) {
    case AtomState::Absent: return "absent";
    case AtomState::ThereOnly: return "there-only";
    case AtomState::Both: return "both";
  }
  return "absent";
}

Interpretation::Interpretation(std::set<std::string> here, std::set<std::string> there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(), here_.end()))
    throw std::invalid_argument("HT-interpretation requires here to be a subset of there");
}

AtomState Interpretation::state(const std::string& atom) const {
  if (here_.contains(atom)) return AtomState::Both;
  if (there_.contains(atom)) return AtomState::ThereOnly;
  return AtomState::Absent;
}

namespace {

using PK = PropFormula::Kind;

class Satisfier {
 public:
  explicit Satisfier(const Interpretation& i) : i_(i) {}

  bool sat(World w, const PropFormula& f) {
    const auto key = std::make_pair(f.identity(), w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = false;
    switch (f.kind()) {
      case PK::Atom: r = i_.at(w).contains(f.name()); break;
      case PK::And:
        r = std::all_of(f.children().begin(), f.children().end(), [&](const PropFormula& c) { return sat(w, c); });
        break;
      case PK::Or:
        r = std::any_of(f.children().begin(), f.children().end(), [&](const PropFormula& c) { return sat(w, c); });
        break;
      case PK::Implies: {
        r = true;
        for (World v : {World::Here, World::There}) {
          if (w == World::There && v == World::Here) continue;  // only w' >= w
          if (sat(v, f.lhs()) && !sat(v, f.rhs())) r = false;
        }
        break;
      }
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, World>& k) const {
      return std::hash<const void*>{}(k.first) * 2 + static_cast<std::size_t>(k.second);
    }
  };
  const Interpretation& i_;
  std::unordered_map<std::pair<const void*, World>, bool, KeyHash> memo_;
};

int g3(const Interpretation& i, const PropFormula& f, std::unordered_map<const void*, int>& memo) {
  if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
  int v = 0;
  switch (f.kind()) {
    case PK::Atom: v = static_cast<int>(i.state(f.name())); break;
    case PK::And:
      v = 2;
      for (const auto& c : f.children()) v = std::min(v, g3(i, c, memo));
      break;
    case PK::Or:
      v = 0;
      for (const auto& c : f.children()) v = std::max(v, g3(i, c, memo));
      break;
    case PK::Implies: {
      const int a = g3(i, f.lhs(), memo);
      const int b = g3(i, f.rhs(), memo);
      v = a <= b ? 2 : b;
      break;
    }
  }
  memo.emplace(f.identity(), v);
  return v;
}

bool classical(const std::set<std::string>& t, const PropFormula& f, std::unordered_map<const void*, bool>& memo) {
  if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
  bool v = false;
  switch (f.kind()) {
    case PK::Atom: v = t.contains(f.name()); break;
    case PK::And:
      v = std::all_of(f.children().begin(), f.children().end(),
                      [&](const PropFormula& c) { return classical(t, c, memo); });
      break;
    case PK::Or:
      v = std::any_of(f.children().begin(), f.children().end(),
                      [&](const PropFormula& c) { return classical(t, c, memo); });
      break;
    case PK::Implies: v = !classical(t, f.lhs(), memo) || classical(t, f.rhs(), memo); break;
  }
  memo.emplace(f.identity(), v);
  return v;
}

// Formula flattened to a DAG in topological order; each node is evaluated to
// a (here, there) pair of truth values from bitmask interpretations.
struct Compiled {
  struct Node {
    PK kind;
    int atom = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;

  Compiled(const PropFormula& f, const std::vector<std::string>& atoms) {
    std::unordered_map<const void*, int> ids;
    std::unordered_map<std::string, int> atom_index;
    for (std::size_t k = 0; k < atoms.size(); ++k) atom_index.emplace(atoms[k], static_cast<int>(k));
    // Iterative post-order so deep instances do not exhaust the stack.
    std::vector<std::pair<const PropFormula*, bool>> stack{{&f, false}};
    while (!stack.empty()) {
      auto [g, expanded] = stack.back();
      stack.pop_back();
      if (ids.contains(g->identity())) continue;
      if (!expanded) {
        stack.push_back({g, true});
        for (const auto& c : g->children()) stack.push_back({&c, false});
        continue;
      }
      Node n{g->kind(), -1, {}};
      if (g->kind() == PK::Atom) n.atom = atom_index.at(g->name());
      for (const auto& c : g->children()) n.children.push_back(ids.at(c.identity()));
      ids.emplace(g->identity(), static_cast<int>(nodes.size()));
      nodes.push_back(std::move(n));
    }
    root = ids.at(f.identity());
  }

  // Returns satisfaction at h (which implies satisfaction at t).
  bool holds(std::uint64_t here, std::uint64_t there, std::vector<std::uint8_t>& h,
             std::vector<std::uint8_t>& t) const {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const Node& n = nodes[k];
      switch (n.kind) {
        case PK::Atom:
          h[k] = (here >> n.atom) & 1U;
          t[k] = (there >> n.atom) & 1U;
          break;
        case PK::And: {
          std::uint8_t a = 1, b = 1;
          for (int c : n.children) {
            a &= h[c];
            b &= t[c];
          }
          h[k] = a;
          t[k] = b;
          break;
        }
        case PK::Or: {
          std::uint8_t a = 0, b = 0;
          for (int c : n.children) {
            a |= h[c];
            b |= t[c];
          }
          h[k] = a;
          t[k] = b;
          break;
        }
        case PK::Implies: {
          const int l = n.children[0], r = n.children[1];
          t[k] = !t[l] || t[r];
          h[k] = (!h[l] || h[r]) && t[k];
          break;
        }
      }
    }
    return h[root];
  }
};

std::uint64_t power3(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t k = 0; k < n; ++k) p *= 3;
  return p;
}

// Decodes index into (here, there) masks; atom k has bit k, the last atom is the least significant digit.
void decode(std::uint64_t index, std::size_t n, std::vector<int>& digits, std::uint64_t& here, std::uint64_t& there) {
  here = there = 0;
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = static_cast<int>(index % 3);
    index /= 3;
    if (digits[k] >= 1) there |= std::uint64_t{1} << k;
    if (digits[k] == 2) here |= std::uint64_t{1} << k;
  }
}

// Advances the odometer by one; masks are updated in place.
void increment(std::size_t n, std::vector<int>& digits, std::uint64_t& here, std::uint64_t& there) {
  for (std::size_t k = n; k-- > 0;) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    if (digits[k] == 0) {
      digits[k] = 1;
      there |= bit;
      return;
    }
    if (digits[k] == 1) {
      digits[k] = 2;
      here |= bit;
      return;
    }
    digits[k] = 0;
    here &= ~bit;
    there &= ~bit;
  }
}

}  // namespace

bool satisfies(const Interpretation& i, World w, const PropFormula& f) { return Satisfier(i).sat(w, f); }

bool models(const Interpretation& i, const PropFormula& f) { return satisfies(i, World::Here, f); }

int g3_eval(const Interpretation& i, const PropFormula& f) {
  std::unordered_map<const void*, int> memo;
  return g3(i, f, memo);
}

bool classical_eval(const std::set<std::string>& true_atoms, const PropFormula& f) {
  std::unordered_map<const void*, bool> memo;
  return classical(true_atoms, f, memo);
}

Interpretation interpretation_at(const std::vector<std::string>& atoms, std::uint64_t index) {
  std::set<std::string> here, there;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    const auto d = index % 3;
    index /= 3;
    if (d >= 1) there.insert(atoms[k]);
    if (d == 2) here.insert(atoms[k]);
  }
  return Interpretation(std::move(here), std::move(there));
}

ValidityResult ht_valid(const PropFormula& f, const ValidityOptions& options) {
  ValidityResult res;
  res.atoms = f.atoms();
  const std::size_t n = res.atoms.size();
  const std::size_t limit = std::min<std::size_t>(options.max_atoms, 40);
  if (n > limit) throw BudgetExceeded("HT-validity check over " + std::to_string(n) + " atoms", power3(std::min<std::size_t>(n, 40)), power3(limit));

  const Compiled prog(f, res.atoms);
  const std::uint64_t total = power3(n);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, total / 4096)));

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first_failure{kNone};
  std::atomic<std::uint64_t> checked{0};

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint8_t> h(prog.nodes.size()), t(prog.nodes.size());
    std::vector<int> digits(n);
    std::uint64_t here = 0, there = 0;
    decode(lo, n, digits, here, there);
    std::uint64_t count = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if ((count & 1023) == 0 && first_failure.load(std::memory_order_relaxed) < idx) break;
      ++count;
      if (!prog.holds(here, there, h, t)) {
        std::uint64_t cur = first_failure.load();
        while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
        }
        break;
      }
      increment(n, digits, here, there);
    }
    checked += count;
  };

  if (workers <= 1) {
    scan(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(scan, lo, hi);
    }
  }

  res.interpretations_checked = checked.load();
  if (first_failure.load() != kNone) {
    res.valid = false;
    res.index = first_failure.load();
    res.countermodel = interpretation_at(res.atoms, res.index);
  }
  return res;
}

std::string render(const Interpretation& i, const std::vector<std::string>& atoms) {
  std::vector<std::string> sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& a : sorted) out += a + ": " + state_name(i.state(a)) + "\n";
  return out;
}

}  // namespace hhtkit::ht
