#include <algorithm>
#include <map>

#include "hhtkit/kernel.hpp"
#include "hhtkit/transform.hpp"

namespace hhtkit::kernel {

const char* level_name(Level l) {
  switch (l) {
    case Level::HHT: return "HHT";
    case Level::HHT2: return "HHT2";
    case Level::HHT2_DCA: return "HHT2+DCA";
  }
  return "HHT";
}

std::optional<Level> parse_level(std::string_view s) {
  if (s == "HHT") return Level::HHT;
  if (s == "HHT2") return Level::HHT2;
  if (s == "HHT2+DCA") return Level::HHT2_DCA;
  return std::nullopt;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::SideConditionViolation: return "SideConditionViolation";
    case ErrorKind::MPMismatch: return "MPMismatch";
    case ErrorKind::ForwardReference: return "ForwardReference";
    case ErrorKind::LevelViolation: return "LevelViolation";
    case ErrorKind::ConclusionNotFirstOrder: return "ConclusionNotFirstOrder";
    case ErrorKind::ConclusionNotClosed: return "ConclusionNotClosed";
  }
  return "ProofError";
}

namespace {

std::string describe(ErrorKind kind, int label, const std::string& just, const std::string& cond) {
  std::string where = label > 0 ? "line " + std::to_string(label) : std::string("proof");
  if (!just.empty()) where += " (" + just + ")";
  return where + ": " + kind_name(kind) + ": " + cond;
}

}  // namespace

ProofError::ProofError(ErrorKind kind, int label, std::string justification, std::string condition)
    : Error(describe(kind, label, justification, condition)),
      kind(kind),
      label(label),
      justification(std::move(justification)),
      condition(std::move(condition)) {}

std::string binding_to_string(const BindingValue& v) {
  struct Visitor {
    std::string operator()(const Formula& f) const { return f.to_string(); }
    std::string operator()(const Term& t) const { return t.to_string(); }
    std::string operator()(const Variable& x) const { return x.to_string(); }
    std::string operator()(const PredicateSymbol& p) const {
      return p.variable ? p.name + "/" + std::to_string(p.arity) : p.name;
    }
    std::string operator()(const Abstraction& a) const {
      std::string out = "lambda";
      for (const auto& x : a.params) out += " " + x.name;
      return out + ". " + a.body.to_string();
    }
  };
  return std::visit(Visitor{}, v);
}

std::string Justification::to_string() const {
  switch (rule) {
    case Rule::Axiom: {
      std::string out = "axiom " + schema;
      if (bindings.empty()) return out;
      // Metavariables in schema order, so the rendering is stable.
      std::vector<std::string> order;
      if (const SchemaInfo* info = find_schema(schema))
        for (const auto& [name, sort] : info->metavariables)
          if (bindings.contains(name)) order.push_back(name);
      for (const auto& [name, value] : bindings)
        if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
      out += " with ";
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ", ";
        out += order[i] + " := " + binding_to_string(bindings.at(order[i]));
      }
      return out;
    }
    case Rule::MP: return "mp " + std::to_string(premise) + " " + std::to_string(major);
    case Rule::GenAll: return "gen-all " + std::to_string(premise) + " " + var.to_string();
    case Rule::GenEx: return "gen-ex " + std::to_string(premise) + " " + var.to_string();
    case Rule::SOGen: return "so-gen " + std::to_string(premise) + " " + var.to_string();
    case Rule::SOGenEx: return "so-gen-ex " + std::to_string(premise) + " " + var.to_string();
  }
  return {};
}

std::string Proof::to_string() const {
  std::string out = signature.to_string();
  out += "level ";
  out += level_name(level);
  out += ";\n\n";
  for (const auto& l : lines)
    out += std::to_string(l.label) + ": " + l.formula.to_string() + "\n    by " + l.justification.to_string() + ";\n";
  return out;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

using K = Formula::Kind;
using Rule = Justification::Rule;

BindingValue eliminate(const BindingValue& v) {
  if (const auto* f = std::get_if<Formula>(&v)) return eliminate_restrictors(*f);
  if (const auto* a = std::get_if<Abstraction>(&v)) return Abstraction{a->params, eliminate_restrictors(a->body)};
  return v;
}

class Checker {
 public:
  explicit Checker(const Proof& p) : p_(p) {}

  Formula run() {
    if (p_.lines.empty()) throw ProofError(ErrorKind::SchemaMismatch, 0, "", "proof has no lines");
    for (const auto& line : p_.lines) check(line);
    return p_.lines.back().formula;
  }

 private:
  [[noreturn]] void fail(const ProofLine& line, ErrorKind kind, const std::string& cond) const {
    throw ProofError(kind, line.label, line.justification.to_string(), cond);
  }

  const Formula& earlier(const ProofLine& line, int ref) const {
    auto it = done_.find(ref);
    if (it == done_.end() || ref >= line.label)
      fail(line, ErrorKind::ForwardReference, "line " + std::to_string(ref) + " is not an earlier line of the proof");
    return it->second;
  }

  void check(const ProofLine& line) {
    const Justification& j = line.justification;
    const Formula f = eliminate_restrictors(line.formula);
    if (p_.level == Level::HHT && !is_first_order(f))
      fail(line, ErrorKind::LevelViolation, "second-order formula at level HHT");
    switch (j.rule) {
      case Rule::Axiom: axiom(line, f); break;
      case Rule::MP: {
        const Formula& minor = earlier(line, j.premise);
        const Formula& major = earlier(line, j.major);
        if (major.kind() != K::Implies)
          fail(line, ErrorKind::MPMismatch, "line " + std::to_string(j.major) + " is not an implication");
        if (!(major.lhs() == minor))
          fail(line, ErrorKind::MPMismatch,
               "antecedent of line " + std::to_string(j.major) + " differs from line " + std::to_string(j.premise));
        if (!(major.rhs() == f))
          fail(line, ErrorKind::MPMismatch, "consequent of line " + std::to_string(j.major) + " differs from this line");
        break;
      }
      case Rule::GenAll:
      case Rule::GenEx:
      case Rule::SOGen:
      case Rule::SOGenEx: generalization(line, f); break;
    }
    done_.insert_or_assign(line.label, f);
  }

  void axiom(const ProofLine& line, const Formula& f) {
    const Justification& j = line.justification;
    if (const SchemaInfo* info = find_schema(j.schema); info && info->level > p_.level)
      fail(line, ErrorKind::LevelViolation,
           "schema " + j.schema + " requires level " + level_name(info->level) + ", proof is at level " +
               level_name(p_.level));
    Bindings b;
    for (const auto& [name, value] : j.bindings) b.emplace(name, eliminate(value));
    try {
      instantiate_schema(j.schema, b, p_.signature, f, line.label);
    } catch (const ProofError& e) {
      fail(line, e.kind, e.condition);
    }
  }

  void generalization(const ProofLine& line, const Formula& f) {
    const Justification& j = line.justification;
    const bool so = j.rule == Rule::SOGen || j.rule == Rule::SOGenEx;
    const bool ex = j.rule == Rule::GenEx || j.rule == Rule::SOGenEx;
    if (so && p_.level == Level::HHT)
      fail(line, ErrorKind::LevelViolation, "second-order generalization requires level HHT2");
    if (so != j.var.second_order())
      fail(line, ErrorKind::SchemaMismatch,
           so ? "rule needs a predicate or function variable" : "rule needs an object variable");
    const Formula& prem = earlier(line, j.premise);
    const Variable& v = j.var;
    auto bound_by = [&](const Formula& q, K kind) {
      return q.kind() == kind && !q.is_generalized() && q.bound() == v;
    };
    if (!ex) {
      // From F infer forall v F.
      if (bound_by(f, K::Forall) && f.body() == prem) return;
      // From G -> F infer G -> forall v F, v not free in G.
      if (f.kind() == K::Implies && bound_by(f.rhs(), K::Forall) && prem.kind() == K::Implies &&
          prem.lhs() == f.lhs() && prem.rhs() == f.rhs().body()) {
        if (occurs_free(f.lhs(), v))
          fail(line, ErrorKind::SideConditionViolation, v.to_string() + " is free in " + f.lhs().to_string());
        return;
      }
      fail(line, ErrorKind::SchemaMismatch,
           "line is neither forall " + v.to_string() + " F nor G -> forall " + v.to_string() +
               " F for the premise line " + std::to_string(j.premise));
    }
    // From F -> G infer exists v F -> G, v not free in G.
    if (f.kind() == K::Implies && bound_by(f.lhs(), K::Exists) && prem.kind() == K::Implies &&
        prem.lhs() == f.lhs().body() && prem.rhs() == f.rhs()) {
      if (occurs_free(f.rhs(), v))
        fail(line, ErrorKind::SideConditionViolation, v.to_string() + " is free in " + f.rhs().to_string());
      return;
    }
    fail(line, ErrorKind::SchemaMismatch,
         "line is not exists " + v.to_string() + " F -> G for the premise line " + std::to_string(j.premise));
  }

  const Proof& p_;
  std::map<int, Formula> done_;
};

}  // namespace

Formula check_proof(const Proof& p) { return Checker(p).run(); }

Formula conclusion_for_pipeline(const Proof& p) {
  Formula f = check_proof(p);
  const int label = p.lines.back().label;
  if (!is_first_order(f))
    throw ProofError(ErrorKind::ConclusionNotFirstOrder, label, "", "conclusion " + f.to_string() + " is second-order");
  if (!is_closed(f))
    throw ProofError(ErrorKind::ConclusionNotClosed, label, "", "conclusion " + f.to_string() + " has free variables");
  return f;
}

// ---------------------------------------------------------------------------
// Proof files

namespace {

BindingValue parse_binding(Parser& p, const Signature& sig, std::optional<MetaSort> sort) {
  switch (sort.value_or(MetaSort::Formula)) {
    case MetaSort::Formula: return p.parse_formula(sig);
    case MetaSort::Term: return p.parse_term(sig);
    case MetaSort::Object: return p.parse_object_variable(sig);
    case MetaSort::SecondOrder: return p.parse_second_order_variable();
    case MetaSort::Abstraction: return p.parse_abstraction(sig);
    case MetaSort::Predicate: {
      const Token at = p.peek();
      std::string name = p.expect_identifier("predicate");
      if (p.accept("/")) return PredicateSymbol{name, p.expect_number(), true};
      auto ar = sig.predicate_arity(name);
      if (!ar) p.fail_at(at, "'" + name + "' is not a predicate constant; write " + name + "/n for a variable");
      return PredicateSymbol{name, *ar, false};
    }
  }
  return p.parse_formula(sig);
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Parser p(text);
  Proof proof;
  proof.signature = p.parse_signature_block();
  const Signature& sig = proof.signature;
  p.expect("level");
  {
    const Token at = p.peek();
    std::string name = p.expect_identifier("theory level");
    if (p.accept("+")) name += "+" + p.expect_identifier("theory level");
    auto level = parse_level(name);
    if (!level) p.fail_at(at, "unknown level '" + name + "' (expected HHT, HHT2 or HHT2+DCA)");
    proof.level = *level;
  }
  p.expect(";");
  int previous = 0;
  while (!p.at_end()) {
    ProofLine line;
    const Token start = p.peek();
    line.source_line = start.line;
    line.label = p.expect_number();
    if (line.label <= previous) p.fail_at(start, "line labels must be increasing");
    previous = line.label;
    p.expect(":");
    line.formula = p.parse_formula(sig);
    p.expect("by");
    Justification& j = line.justification;
    const Token rule_at = p.peek();
    const std::string rule = p.expect_identifier("rule");
    if (rule == "axiom") {
      j.rule = Justification::Rule::Axiom;
      j.schema = p.expect_identifier("schema name");
      const SchemaInfo* info = find_schema(j.schema);
      if (p.accept("with")) {
        do {
          const Token at = p.peek();
          std::string name = p.expect_identifier("metavariable");
          p.expect(":=");
          std::optional<MetaSort> sort;
          if (info) {
            for (const auto& [n, s] : info->metavariables)
              if (n == name) sort = s;
            if (!sort) p.fail_at(at, "schema " + j.schema + " has no metavariable " + name);
          }
          if (j.bindings.contains(name)) p.fail_at(at, "metavariable " + name + " bound twice");
          j.bindings.emplace(name, parse_binding(p, sig, sort));
        } while (p.accept(","));
      }
    } else if (rule == "mp") {
      j.rule = Justification::Rule::MP;
      j.premise = p.expect_number();
      j.major = p.expect_number();
    } else if (rule == "gen-all" || rule == "gen-ex") {
      j.rule = rule == "gen-all" ? Justification::Rule::GenAll : Justification::Rule::GenEx;
      j.premise = p.expect_number();
      j.var = p.parse_object_variable(sig);
    } else if (rule == "so-gen" || rule == "so-gen-ex") {
      j.rule = rule == "so-gen" ? Justification::Rule::SOGen : Justification::Rule::SOGenEx;
      j.premise = p.expect_number();
      j.var = p.parse_second_order_variable();
    } else {
      p.fail_at(rule_at, "unknown rule '" + rule + "' (expected axiom, mp, gen-all, gen-ex, so-gen or so-gen-ex)");
    }
    p.expect(";");
    proof.lines.push_back(std::move(line));
  }
  if (proof.lines.empty()) p.fail("proof has no lines");
  return proof;
}

}  // namespace hhtkit::kernel
