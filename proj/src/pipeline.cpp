#include <chrono>
#include <sstream>

#include "hhtkit/pipeline.hpp"

namespace hhtkit::pipeline {

namespace {

using K = Formula::Kind;

class SymbolCheck {
 public:
  explicit SymbolCheck(const Signature& sig) : sig_(sig) {}

  void term(const Term& t) {
    if (t.kind() == Term::Kind::Function) {
      auto ar = sig_.function_arity(t.name());
      if (!ar || *ar != t.arity())
        throw SignatureError("function constant " + t.name() + "/" + std::to_string(t.arity()) +
                             " of the proof is not declared in the target signature");
    }
    for (const auto& a : t.args()) term(a);
  }

  void formula(const Formula& f) {
    switch (f.kind()) {
      case K::Bot: return;
      case K::Equal:
        term(f.left_term());
        term(f.right_term());
        return;
      case K::Atom: {
        if (!f.is_predicate_variable()) {
          auto ar = sig_.predicate_arity(f.predicate());
          if (!ar || *ar != static_cast<int>(f.args().size()))
            throw SignatureError("predicate " + f.predicate() + "/" + std::to_string(f.args().size()) +
                                 " of the proof is not declared in the target signature");
        }
        for (const auto& a : f.args()) term(a);
        return;
      }
      case K::And:
      case K::Or:
      case K::Implies:
        formula(f.lhs());
        formula(f.rhs());
        return;
      case K::Forall:
      case K::Exists:
        for (const auto& b : f.binders())
          if (!b.restrictor.empty() && !sig_.is_restrictor(b.restrictor))
            throw SignatureError("restrictor " + b.restrictor + " of the proof is not declared in the target signature");
        formula(f.body());
        return;
    }
  }

  void binding(const kernel::BindingValue& v) {
    if (const auto* f = std::get_if<Formula>(&v)) formula(*f);
    if (const auto* t = std::get_if<Term>(&v)) term(*t);
    if (const auto* a = std::get_if<Abstraction>(&v)) formula(a->body);
  }

 private:
  const Signature& sig_;
};

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

kernel::Proof rebase(const kernel::Proof& proof, const Signature& sig) {
  SymbolCheck check(sig);
  for (const auto& r : proof.signature.restrictors())
    if (!sig.is_restrictor(r)) throw SignatureError("restrictor " + r + " of the proof is not a restrictor of the target signature");
  for (const auto& line : proof.lines) {
    check.formula(line.formula);
    for (const auto& [name, value] : line.justification.bindings) check.binding(value);
  }
  kernel::Proof out = proof;
  out.signature = sig;
  return out;
}

InstanceStats instance_stats(const PropFormula& f) {
  return InstanceStats{f.atoms().size(), f.rank(), f.size()};
}

int Report::exit_code() const {
  if (!proof_accepted) return 1;
  if (approximate) return 1;
  return valid.value_or(false) ? 0 : 1;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "proof: ";
  if (proof_accepted) {
    out << "accepted at level " << level << " (" << proof_lines << " lines)\n";
  } else {
    out << "rejected\n  " << (proof_error ? proof_error->message : std::string("unknown error")) << "\n";
  }
  if (!conclusion.empty()) out << "conclusion: " << conclusion << "\n";
  if (!mode.empty()) out << "mode: " << mode << "\n";
  if (approximate) out << kBoundedLabel << "\n";
  if (stats) out << "instance: " << stats->atoms << " atoms, rank " << stats->rank << ", " << stats->nodes << " nodes\n";
  if (valid) {
    if (*valid) {
      out << "instance: HT-valid" << (approximate ? " (truncated instance only; not a certificate)" : "") << "\n";
    } else {
      out << "instance: NOT HT-valid; countermodel:\n";
      std::istringstream lines(countermodel);
      for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
    }
  }
  out << "timing:";
  for (const auto& t : timings) out << " " << t.stage << " " << t.milliseconds << " ms;";
  out << "\n";
  return out.str();
}

Report run(const kernel::Proof& proof, const Substitution& psi, InstantiationMode mode,
           const ht::ValidityOptions& options) {
  Report r;
  r.level = kernel::level_name(proof.level);
  r.proof_lines = proof.lines.size();
  r.mode = mode.to_string();
  r.approximate = !mode.is_exact();
  Stopwatch clock;

  Formula conclusion = Formula::bot();
  try {
    conclusion = kernel::conclusion_for_pipeline(proof);
    if (!(proof.signature == psi.signature())) kernel::check_proof(rebase(proof, psi.signature()));
    r.proof_accepted = true;
  } catch (const kernel::ProofError& e) {
    r.proof_error = ProofFailure{e.kind, e.label, e.justification, e.condition, e.what()};
  }
  r.timings.push_back({"proof", clock.lap()});
  if (!r.proof_accepted) return r;
  r.conclusion = conclusion.to_string();

  PropFormula instance = instantiate(psi, conclusion, mode);
  r.stats = instance_stats(instance);
  r.timings.push_back({"instantiate", clock.lap()});

  ht::ValidityResult v = ht::ht_valid(instance, options);
  r.valid = v.valid;
  r.atoms = v.atoms;
  if (v.countermodel) r.countermodel = ht::render(*v.countermodel, v.atoms);
  r.timings.push_back({"ht-valid", clock.lap()});
  return r;
}

}  // namespace hhtkit::pipeline
