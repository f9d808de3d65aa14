#include "hhtkit/prop.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <unordered_set>

namespace hhtkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

PropFormula PropFormula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix(17, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return PropFormula(std::move(n));
}

PropFormula PropFormula::make_set(Kind k, std::vector<PropFormula> children) {
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->hash = mix(static_cast<std::size_t>(k) * 101, children.size());
  int max_rank = -1;
  for (const auto& c : children) {
    max_rank = std::max(max_rank, c.rank());
    n->size = saturating_add(n->size, c.size());
    n->hash = mix(n->hash, c.hash());
  }
  n->rank = max_rank + 1;
  n->children = std::move(children);
  return PropFormula(std::move(n));
}

PropFormula PropFormula::conj(std::vector<PropFormula> children) { return make_set(Kind::And, std::move(children)); }
PropFormula PropFormula::disj(std::vector<PropFormula> children) { return make_set(Kind::Or, std::move(children)); }

PropFormula PropFormula::implies(PropFormula lhs, PropFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->rank = std::max(lhs.rank(), rhs.rank()) + 1;
  n->size = saturating_add(1, saturating_add(lhs.size(), rhs.size()));
  n->hash = mix(mix(977, lhs.hash()), rhs.hash());
  n->children = {std::move(lhs), std::move(rhs)};
  return PropFormula(std::move(n));
}

std::vector<std::string> PropFormula::atoms() const {
  std::set<std::string> out;
  std::unordered_set<const void*> seen;
  std::vector<const PropFormula*> stack{this};
  while (!stack.empty()) {
    const PropFormula* f = stack.back();
    stack.pop_back();
    if (!seen.insert(f->identity()).second) continue;
    if (f->kind() == Kind::Atom) {
      out.insert(f->name());
      continue;
    }
    for (const auto& c : f->children()) stack.push_back(&c);
  }
  return {out.begin(), out.end()};
}

bool operator==(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.name == y.name && x.children == y.children;
}

std::strong_ordering operator<=>(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace hhtkit
