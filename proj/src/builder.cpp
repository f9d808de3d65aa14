#include "hhtkit/builder.hpp"
#include "hhtkit/transform.hpp"

namespace hhtkit::kernel {

using K = Formula::Kind;
using Rule = Justification::Rule;

namespace {

std::vector<Formula> extend(std::span<const Formula> ctx, std::initializer_list<Formula> more) {
  std::vector<Formula> out(ctx.begin(), ctx.end());
  out.insert(out.end(), more);
  return out;
}

}  // namespace

ProofBuilder::ProofBuilder(Signature sig, Level level) {
  proof_.signature = std::move(sig);
  proof_.level = level;
}

int ProofBuilder::emit(Formula f, Justification j) {
  const int label = static_cast<int>(proof_.lines.size()) + 1;
  proof_.lines.push_back(ProofLine{label, std::move(f), std::move(j), 0});
  return label;
}

Formula ProofBuilder::strip(Ctx ctx, int label) const {
  Formula f = proof_.lines.at(label - 1).formula;
  for (const auto& h : ctx) {
    if (f.kind() != K::Implies || !(f.lhs() == h)) throw Error("builder: line " + std::to_string(label) + " is not under hypothesis " + h.to_string());
    f = f.rhs();
  }
  return f;
}

int ProofBuilder::ax(Ctx ctx, const std::string& id, Bindings b) {
  Formula f = instantiate_schema(id, b, proof_.signature);
  const std::string key = f.to_string();
  auto it = axioms_.find(key);
  int label;
  if (it != axioms_.end()) {
    label = it->second;
  } else {
    Justification j;
    j.rule = Rule::Axiom;
    j.schema = id;
    j.bindings = std::move(b);
    label = emit(std::move(f), std::move(j));
    axioms_.emplace(key, label);
  }
  return lift_theorem(ctx, label);
}

int ProofBuilder::lift_theorem(Ctx ctx, int label) { return weaken(ctx, label, 0); }

// `label` is a fact under ctx[0..from); the result is the same fact under ctx.
int ProofBuilder::weaken(Ctx ctx, int label, std::size_t from) {
  for (std::size_t c = from + 1; c <= ctx.size(); ++c) {
    Ctx outer = ctx.first(c - 1);
    Formula f = strip(outer, label);
    int k = ax(outer, "k", {{"F", f}, {"G", ctx[c - 1]}});
    label = mp_in(outer, label, k);
  }
  return label;
}

int ProofBuilder::mp_in(Ctx ctx, int minor, int major) {
  const Formula g = strip(ctx, major);
  if (g.kind() != K::Implies) throw Error("builder: major premise is not an implication");
  if (ctx.empty()) {
    Justification j;
    j.rule = Rule::MP;
    j.premise = minor;
    j.major = major;
    return emit(g.rhs(), std::move(j));
  }
  Ctx outer = ctx.first(ctx.size() - 1);
  int s = ax(outer, "s", {{"F", ctx.back()}, {"G", g.lhs()}, {"H", g.rhs()}});
  int t = mp_in(outer, major, s);
  return mp_in(outer, minor, t);
}

int ProofBuilder::identity(Ctx ctx, const Formula& a) {
  const Formula aa = Formula::implies(a, a);
  int s = ax(ctx, "s", {{"F", a}, {"G", aa}, {"H", a}});
  int k1 = ax(ctx, "k", {{"F", a}, {"G", aa}});
  int m = mp_in(ctx, k1, s);
  int k2 = ax(ctx, "k", {{"F", a}, {"G", a}});
  return mp_in(ctx, k2, m);
}

int ProofBuilder::gen_in(Ctx ctx, int label, const Variable& x) {
  if (ctx.empty()) {
    Justification j;
    j.rule = x.second_order() ? Rule::SOGen : Rule::GenAll;
    j.premise = label;
    j.var = x;
    return emit(Formula::forall(x, proof_.lines.at(label - 1).formula), std::move(j));
  }
  for (const auto& h : ctx)
    if (occurs_free(h, x)) throw Error("builder: " + x.to_string() + " is free in hypothesis " + h.to_string());
  return gen_bernays(ctx.first(ctx.size() - 1), label, x);
}

int ProofBuilder::gen_bernays(Ctx ctx, int label, const Variable& x) {
  if (ctx.empty()) {
    const Formula f = proof_.lines.at(label - 1).formula;
    Justification j;
    j.rule = x.second_order() ? Rule::SOGen : Rule::GenAll;
    j.premise = label;
    j.var = x;
    return emit(Formula::implies(f.lhs(), Formula::forall(x, f.rhs())), std::move(j));
  }
  Ctx outer = ctx.first(ctx.size() - 1);
  int u = uncurry(outer, label);
  int g = gen_bernays(outer, u, x);
  return curry(outer, g);
}

int ProofBuilder::gen_ex_in(Ctx ctx, int label, const Variable& x) {
  if (ctx.empty()) {
    const Formula f = proof_.lines.at(label - 1).formula;
    Justification j;
    j.rule = x.second_order() ? Rule::SOGenEx : Rule::GenEx;
    j.premise = label;
    j.var = x;
    return emit(Formula::implies(Formula::exists(x, f.lhs()), f.rhs()), std::move(j));
  }
  Ctx outer = ctx.first(ctx.size() - 1);
  int sw = swap(outer, label);
  int e = gen_ex_in(outer, sw, x);
  return swap(outer, e);
}

int ProofBuilder::uncurry(Ctx ctx, int label) {
  const Formula f = strip(ctx, label);
  const Formula a = f.lhs(), b = f.rhs().lhs();
  const auto c2 = extend(ctx, {Formula::conj(a, b)});
  int h = identity(ctx, Formula::conj(a, b));
  int pa = mp_in(c2, h, ax(c2, "and-e1", {{"F", a}, {"G", b}}));
  int pb = mp_in(c2, h, ax(c2, "and-e2", {{"F", a}, {"G", b}}));
  int w = weaken(c2, label, ctx.size());
  return mp_in(c2, pb, mp_in(c2, pa, w));
}

int ProofBuilder::curry(Ctx ctx, int label) {
  const Formula f = strip(ctx, label);
  const Formula a = f.lhs().lhs(), b = f.lhs().rhs();
  const auto c2 = extend(ctx, {a});
  const auto c3 = extend(ctx, {a, b});
  int pa = weaken(c3, identity(ctx, a), ctx.size() + 1);
  int pb = identity(c2, b);
  int ab = mp_in(c3, pb, mp_in(c3, pa, ax(c3, "and-i", {{"F", a}, {"G", b}})));
  return mp_in(c3, ab, weaken(c3, label, ctx.size()));
}

int ProofBuilder::swap(Ctx ctx, int label) {
  const Formula f = strip(ctx, label);
  const Formula a = f.lhs(), b = f.rhs().lhs();
  const auto c3 = extend(ctx, {b, a});
  int pb = weaken(c3, identity(ctx, b), ctx.size() + 1);
  int pa = identity(extend(ctx, {b}), a);
  int w = weaken(c3, label, ctx.size());
  return mp_in(c3, pb, mp_in(c3, pa, w));
}

ProofBuilder::Fact ProofBuilder::here(Fact f) {
  if (f.depth > stack_.size()) throw Error("builder: fact from a discharged hypothesis");
  return Fact{weaken(stack_, f.label, f.depth), stack_.size()};
}

Formula ProofBuilder::formula(Fact f) const {
  return strip(Ctx(stack_).first(f.depth), f.label);
}

ProofBuilder::Fact ProofBuilder::axiom(const std::string& id, Bindings bindings) {
  return Fact{ax(stack_, id, std::move(bindings)), stack_.size()};
}

ProofBuilder::Fact ProofBuilder::assume(const Formula& h) {
  int label = identity(stack_, h);
  stack_.push_back(h);
  return Fact{label, stack_.size()};
}

ProofBuilder::Fact ProofBuilder::discharge(Fact f) {
  if (stack_.empty()) throw Error("builder: no open hypothesis");
  f = here(f);
  stack_.pop_back();
  return Fact{f.label, stack_.size()};
}

ProofBuilder::Fact ProofBuilder::mp(Fact minor, Fact major) {
  minor = here(minor);
  major = here(major);
  return Fact{mp_in(stack_, minor.label, major.label), stack_.size()};
}

ProofBuilder::Fact ProofBuilder::gen_all(Fact f, const Variable& x) {
  f = here(f);
  return Fact{gen_in(stack_, f.label, x), stack_.size()};
}

ProofBuilder::Fact ProofBuilder::gen_ex(Fact f, const Variable& x) {
  f = here(f);
  return Fact{gen_ex_in(stack_, f.label, x), stack_.size()};
}

ProofBuilder::Fact ProofBuilder::and_intro(Fact a, Fact b) {
  return mp(b, mp(a, axiom("and-i", {{"F", formula(a)}, {"G", formula(b)}})));
}

ProofBuilder::Fact ProofBuilder::and_left(Fact f) {
  const Formula c = formula(f);
  return mp(f, axiom("and-e1", {{"F", c.lhs()}, {"G", c.rhs()}}));
}

ProofBuilder::Fact ProofBuilder::and_right(Fact f) {
  const Formula c = formula(f);
  return mp(f, axiom("and-e2", {{"F", c.lhs()}, {"G", c.rhs()}}));
}

ProofBuilder::Fact ProofBuilder::or_left(Fact a, const Formula& b) {
  return mp(a, axiom("or-i1", {{"F", formula(a)}, {"G", b}}));
}

ProofBuilder::Fact ProofBuilder::or_right(const Formula& a, Fact b) {
  return mp(b, axiom("or-i2", {{"F", a}, {"G", formula(b)}}));
}

ProofBuilder::Fact ProofBuilder::or_elim(Fact ab, Fact ac, Fact bc) {
  const Formula d = formula(ab);
  const Formula c = formula(ac).rhs();
  Fact e = axiom("or-e", {{"F", d.lhs()}, {"G", d.rhs()}, {"H", c}});
  return mp(ab, mp(bc, mp(ac, e)));
}

ProofBuilder::Fact ProofBuilder::efq(Fact bot, const Formula& f) { return mp(bot, axiom("efq", {{"F", f}})); }

ProofBuilder::Fact ProofBuilder::iff_intro(Fact ab, Fact ba) { return and_intro(ab, ba); }

ProofBuilder::Fact ProofBuilder::all_elim(Fact all, const Term& t) {
  const Formula q = formula(all);
  return mp(all, axiom("all-e", {{"x", q.bound()}, {"F", q.body()}, {"t", t}}));
}

ProofBuilder::Fact ProofBuilder::ex_intro(const Formula& body, const Variable& x, const Term& t, Fact inst) {
  return mp(inst, axiom("ex-i", {{"x", x}, {"F", body}, {"t", t}}));
}

ProofBuilder::Fact ProofBuilder::ex_elim(Fact ex, Fact imp) {
  return mp(ex, gen_ex(imp, formula(ex).bound()));
}

ProofBuilder::Fact ProofBuilder::so_all_elim(Fact all, const Abstraction& l) {
  const Formula q = formula(all);
  return mp(all, axiom("so-all-abs", {{"p", q.bound()}, {"G", q.body()}, {"L", l}}));
}

void ProofBuilder::restate_conclusion(const Formula& display) {
  if (proof_.lines.empty()) throw Error("builder: empty proof");
  ProofLine& last = proof_.lines.back();
  if (!(eliminate_restrictors(display) == last.formula))
    throw Error("builder: " + display.to_string() + " does not restate " + last.formula.to_string());
  last.formula = display;
}

}  // namespace hhtkit::kernel
