// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.
//
// Usage: hhtkit-acceptance <corpus-dir> [A1 A2 ...]

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hhtkit/herbrand.hpp"
#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/kernel.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/pipeline.hpp"
#include "hhtkit/transform.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace hhtkit;
namespace fs = std::filesystem;
using testing::Rng;

namespace {

// Tolerances and trial counts.
constexpr double kA1SecondsLimit = 10.0;
constexpr int kA1RandomPerCase = 5;
constexpr int kA3PerSchema = 200;
constexpr int kA3SecondOrderPerSchema = 10;
constexpr int kA3SecondOrderMinimum = 20;
constexpr int kA4Trials = 1000;
constexpr int kA5Trials = 500;
constexpr int kA7Trials = 10000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

std::string corpus_dir;

std::string in_corpus(const std::string& name) { return corpus_dir + "/" + name; }

// ---------------------------------------------------------------- A1

// Proof a substitution file belongs to: the name up to its _A / _D suffix.
std::string proof_for(const std::string& subst_stem) {
  for (const char* tag : {"_A", "_D"}) {
    auto pos = subst_stem.rfind(tag);
    if (pos != std::string::npos && pos + 2 < subst_stem.size() && std::isdigit(subst_stem[pos + 2])) {
      std::string base = subst_stem.substr(0, pos);
      // example5_A3_B2 -> example5
      auto again = base.rfind("_A");
      if (again != std::string::npos && again + 2 < base.size() && std::isdigit(base[again + 2]))
        base = base.substr(0, again);
      return base;
    }
  }
  return subst_stem;
}

void a1(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, kernel::Proof> proofs;
  for (const auto& e : fs::directory_iterator(corpus_dir)) {
    if (e.path().extension() != ".proof" || e.path().stem() == "classical") continue;
    kernel::Proof p = kernel::parse_proof(read_file(e.path().string()));
    try {
      kernel::check_proof(p);
    } catch (const kernel::ProofError& err) {
      out.fail(e.path().filename().string() + ": " + err.what());
    }
    proofs.emplace(e.path().stem().string(), std::move(p));
  }

  Rng rng(101);
  auto atoms = testing::atom_names(3);
  int exact = 0, randomized = 0;
  double extra = 0;  // randomized substitutions, not part of the timed corpus run
  std::vector<std::string> substs;
  for (const auto& e : fs::directory_iterator(corpus_dir))
    if (e.path().extension() == ".subst") substs.push_back(e.path().stem().string());
  std::sort(substs.begin(), substs.end());
  for (const auto& stem : substs) {
    const std::string name = proof_for(stem);
    auto it = proofs.find(name);
    if (it == proofs.end()) {
      out.fail(stem + ": no proof named " + name);
      continue;
    }
    Substitution psi = parse_substitution(read_file(in_corpus(stem + ".subst")));
    // bounded-only cases (non-nullary signatures) are covered by A6
    if (!psi.signature().all_nullary()) continue;
    auto r = pipeline::run(it->second, psi, InstantiationMode::exact());
    ++exact;
    if (r.exit_code() != 0) out.fail(stem + ": exact pipeline did not certify the instance");

    const auto extra_start = std::chrono::steady_clock::now();
    const Formula conclusion = kernel::conclusion_for_pipeline(it->second);
    for (int k = 0; k < kA1RandomPerCase; ++k) {
      Substitution rnd = testing::random_substitution(rng, psi.signature(), atoms, 2);
      ++randomized;
      if (!ht::ht_valid(instantiate(rnd, conclusion, InstantiationMode::exact())).valid)
        out.fail(stem + ": random substitution gave a countermodel");
    }
    extra += std::chrono::duration<double>(std::chrono::steady_clock::now() - extra_start).count();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() - extra;
  if (secs >= kA1SecondsLimit) out.fail("runtime " + std::to_string(secs) + " s exceeds the limit");
  out.detail << proofs.size() << " proofs accepted, " << exact << " corpus instances and " << randomized
             << " random instances valid; corpus run " << secs << " s (limit " << kA1SecondsLimit << " s)";
}

// ---------------------------------------------------------------- A2

void a2(Outcome& out) {
  const ht::Interpretation expected({}, {"p"});
  for (const char* file : {"lem.prop", "dne.prop"}) {
    auto r = ht::ht_valid(parse_prop_formula(read_file(in_corpus(file))));
    if (r.valid || !(*r.countermodel == expected) || ht::render(*r.countermodel, r.atoms) != "p: there-only\n")
      out.fail(std::string(file) + ": expected countermodel <{}, {p}>");
  }
  for (const char* file : {"hosoi.prop", "sqht_A2.prop", "top_not_bot.prop"})
    if (!ht::ht_valid(parse_prop_formula(read_file(in_corpus(file)))).valid) out.fail(std::string(file) + " not valid");

  // hosoi and sqht over random F, G and |A| = 1..4
  Rng rng(202);
  auto atoms = testing::atom_names(3);
  int count = 0;
  for (int k = 0; k < 50; ++k) {
    PropFormula f = testing::random_prop(rng, atoms, 3), g = testing::random_prop(rng, atoms, 3);
    PropFormula hosoi = PropFormula::disj({f, PropFormula::implies(f, g), PropFormula::neg(g)});
    ++count;
    if (!ht::ht_valid(hosoi).valid) out.fail("hosoi instance " + hosoi.to_string());
  }
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 25; ++k) {
      std::vector<PropFormula> fs;
      for (int a = 0; a < n; ++a) fs.push_back(testing::random_prop(rng, atoms, 2));
      std::vector<PropFormula> disjuncts;
      for (const auto& fa : fs) disjuncts.push_back(PropFormula::implies(fa, PropFormula::conj(fs)));
      PropFormula sqht = PropFormula::disj(disjuncts);
      ++count;
      if (!ht::ht_valid(sqht).valid) out.fail("sqht instance " + sqht.to_string());
    }
  out.detail << "lem, dne give <{}, {p}>; hosoi, sqht, top <-> not bot valid; " << count << " random instances valid";
}

// ---------------------------------------------------------------- A3

struct SchemaSampler {
  Signature sig;
  InstantiationMode mode;
  testing::FormulaGen gen;
  std::vector<std::string> consts;

  SchemaSampler(Signature s, InstantiationMode m) : sig(std::move(s)), mode(m), gen(sig) {
    consts = sig.object_constants();
  }

  const std::vector<Variable> scope{Variable::object("x"), Variable::object("y")};

  Term term(Rng& rng) const { return gen.term(rng, scope); }
  Term constant(Rng& rng) const { return Term::constant(consts[testing::pick(rng, static_cast<int>(consts.size()))]); }

  // Bindings for a first-order schema; the returned map may violate side
  // conditions, in which case the caller resamples.
  kernel::Bindings bindings(Rng& rng, const std::string& id) const {
    kernel::Bindings b;
    const std::vector<Term> fterms = function_terms();
    if (id == "cet-distinct") {
      std::vector<Term> heads = fterms;
      for (const auto& c : consts) heads.push_back(Term::constant(c));
      Term s = heads[testing::pick(rng, static_cast<int>(heads.size()))];
      Term t = heads[testing::pick(rng, static_cast<int>(heads.size()))];
      b.emplace("s", s);
      b.emplace("t", t);
      return b;
    }
    if (id == "cet-inject") {
      b.emplace("s", Term::function("f", {term(rng)}));
      b.emplace("t", Term::function("f", {term(rng)}));
      return b;
    }
    if (id == "cet-acyclic") {
      Term s = term(rng);
      Term t = Term::function("f", {s});
      if (testing::coin(rng)) t = Term::function("f", {t});
      b.emplace("t", t);
      b.emplace("s", s);
      return b;
    }
    for (const auto& [name, sort] : kernel::find_schema(id)->metavariables) {
      switch (sort) {
        case kernel::MetaSort::Formula: b.emplace(name, gen.formula(rng, 2, scope)); break;
        case kernel::MetaSort::Term: b.emplace(name, term(rng)); break;
        case kernel::MetaSort::Object: b.emplace(name, scope[testing::pick(rng, 2)]); break;
        default: break;
      }
    }
    return b;
  }

  // f(x), f(a), ... when the signature has f/1.
  std::vector<Term> function_terms() const {
    std::vector<Term> out;
    if (sig.function_arity("f") == 1) {
      out.push_back(Term::function("f", {Term::variable("x")}));
      out.push_back(Term::function("f", {Term::constant(consts[0])}));
    }
    return out;
  }
};

bool uses_functions(const std::string& id) { return id == "cet-inject" || id == "cet-acyclic"; }

void a3(Outcome& out) {
  Rng rng(303);
  // 3 constants with a small base, or 2 constants with a binary predicate
  SchemaSampler three(parse_signature("const a, b, c. pred P/1, Q/0."), InstantiationMode::exact());
  SchemaSampler two(parse_signature("const a, b. pred P/1, Q/0, S/2."), InstantiationMode::exact());
  // Injectivity and acyclicity have no instances without a unary function
  // constant; these are checked on the universe truncated at depth 2.
  SchemaSampler unary(parse_signature("const a, b. fn f/1. pred P/1, Q/0."), InstantiationMode::bounded(2));

  std::size_t min_count = SIZE_MAX;
  int total = 0;
  for (const auto& info : kernel::list_schemas(kernel::Level::HHT)) {
    int passed = 0, attempts = 0;
    while (passed < kA3PerSchema && attempts < 20 * kA3PerSchema) {
      ++attempts;
      const SchemaSampler& s = uses_functions(info.id) ? unary : (attempts % 2 ? three : two);
      kernel::Bindings b = s.bindings(rng, info.id);
      Formula inst = Formula::bot();
      try {
        inst = kernel::instantiate_schema(info.id, b, s.sig);
      } catch (const kernel::ProofError&) {
        continue;  // side condition not met; resample
      }
      Formula closed = universal_closure(inst);
      auto r = herbrand::hht_valid_bruteforce(s.sig, closed, herbrand::kDefaultBudget * 10, s.mode);
      if (!r.valid) out.fail(info.id + ": " + closed.to_string());
      ++passed;
    }
    min_count = std::min<std::size_t>(min_count, passed);
    total += passed;
    if (passed < kA3PerSchema) out.fail(info.id + ": only " + std::to_string(passed) + " instances generated");
  }

  // Second-order part: universe of at most 2 constants, arity at most 1
  // (choice uses a binary predicate, i.e. a unary function name).
  Signature sig1 = parse_signature("const a. pred P/1, Q/0, S/2.");
  Signature sig2 = parse_signature("const a, b. pred P/1, Q/0, S/2.");
  int so_total = 0;
  for (const std::string id : {"comprehension", "choice", "dca", "so-all-e", "so-ex-i", "so-all-abs"}) {
    for (int k = 0; k < kA3SecondOrderPerSchema; ++k) {
      const Signature& sig = k % 2 ? sig2 : sig1;
      // formulas mentioning the predicate variables p/1 and q/1
      Signature ext = parse_signature(sig.to_string() + " pred p/1, q/1.");
      testing::FormulaGen gen(ext, false);
      auto with_p = [&](int depth, std::vector<Variable> scope) {
        return parse_formula(gen.formula(rng, depth, std::move(scope)).to_string(), sig);
      };
      testing::FormulaGen plain(sig, false);
      const Variable x = Variable::object("x");
      kernel::Bindings b;
      if (id == "comprehension") {
        b.emplace("p", Variable::predicate("r", 1));
        b.emplace("L", Abstraction{{x}, plain.formula(rng, 2, {x})});
      } else if (id == "choice") {
        if (k % 3 == 0)
          b.emplace("p", kernel::PredicateSymbol{"S", 2, false});
        else
          b.emplace("p", kernel::PredicateSymbol{"r", 2, true});
        b.emplace("f", Variable::function("g", 1));
      } else if (id == "dca") {
        b.emplace("p", Variable::predicate("p", 1));
      } else if (id == "so-all-e" || id == "so-ex-i") {
        b.emplace("v", Variable::predicate("p", 1));
        b.emplace("G", with_p(2, {}));
        b.emplace("w", Variable::predicate(k % 2 ? "q" : "p", 1));
      } else {
        b.emplace("p", Variable::predicate("p", 1));
        b.emplace("G", with_p(2, {}));
        b.emplace("L", Abstraction{{x}, plain.formula(rng, 2, {x})});
      }
      Formula inst = Formula::bot();
      try {
        inst = kernel::instantiate_schema(id, b, sig);
      } catch (const kernel::ProofError& e) {
        out.fail(id + ": " + e.what());
        continue;
      }
      Formula closed = universal_closure(inst);
      try {
        if (!herbrand::hht_valid_bruteforce(sig, closed, herbrand::kDefaultBudget * 10).valid)
          out.fail(id + ": " + closed.to_string());
        ++so_total;
      } catch (const BudgetExceeded& e) {
        out.fail(id + ": " + e.what());
      }
    }
  }
  if (so_total < kA3SecondOrderMinimum) out.fail("only " + std::to_string(so_total) + " second-order instances");
  out.detail << total << " first-order schema instances (min " << min_count << " per schema over "
             << kernel::list_schemas(kernel::Level::HHT).size() << " schemas), " << so_total
             << " second-order instances, 0 countermodels expected";
}

// ---------------------------------------------------------------- A4, A5

Signature random_signature(Rng& rng) {
  static const char* consts[] = {"const a.", "const a, b.", "const a, b, c."};
  return parse_signature(std::string(consts[testing::pick(rng, 3)]) + " pred P/1, Q/0, S/2. restrictor R, T.");
}

void a4(Outcome& out) {
  Rng rng(404);
  auto atoms = testing::atom_names(3);
  int restricted = 0;
  for (int n = 0; n < kA4Trials; ++n) {
    Signature sig = random_signature(rng);
    testing::FormulaGen gen(sig, true);
    Formula f = gen.closed(rng, 4);
    if (has_restrictors(f)) ++restricted;
    Substitution psi = testing::random_substitution(rng, sig, atoms, 2);
    ht::Interpretation i = testing::random_interpretation(rng, atoms);
    if (!herbrand::lifting_check(psi, i, f)) out.fail(f.to_string());
  }
  out.detail << kA4Trials << " trials (" << restricted << " with restrictors), depth <= 4, <= 3 constants";
}

void a5(Outcome& out) {
  Rng rng(505);
  auto atoms = testing::atom_names(3);
  int trials = 0, pairs = 0;
  while (trials < kA5Trials) {
    Signature sig = random_signature(rng);
    testing::FormulaGen gen(sig, true);
    Formula f = gen.closed(rng, 4);
    if (!has_restrictors(f)) continue;
    ++trials;
    Substitution psi = testing::random_substitution(rng, sig, atoms, 2);
    PropFormula a = instantiate(psi, f, InstantiationMode::exact());
    PropFormula b = instantiate(psi, eliminate_restrictors(f), InstantiationMode::exact());
    std::vector<std::string> names = PropFormula::conj({a, b}).atoms();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < names.size(); ++k) total *= 3;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      ht::Interpretation i = ht::interpretation_at(names, idx);
      for (ht::World w : {ht::World::Here, ht::World::There}) {
        ++pairs;
        if (ht::satisfies(i, w, a) != ht::satisfies(i, w, b)) out.fail(f.to_string());
      }
    }
  }
  out.detail << trials << " restrictor formulas, " << pairs << " (interpretation, world) pairs agree";
}

// ---------------------------------------------------------------- A6

void a6(Outcome& out) {
  kernel::Proof p = kernel::parse_proof(read_file(in_corpus("example7.proof")));
  Substitution psi = parse_substitution(read_file(in_corpus("example7_D3.subst")));
  auto r = pipeline::run(p, psi, InstantiationMode::bounded(3));
  if (!r.proof_accepted) out.fail("example7.proof rejected");
  if (r.level != "HHT2+DCA") out.fail("level is " + r.level);
  if (r.valid != false) out.fail("truncated instance is not refuted");
  if (!r.approximate || r.to_text().find(pipeline::kBoundedLabel) == std::string::npos)
    out.fail("run not labeled bounded");
  if (r.exit_code() == 0) out.fail("bounded run exits 0");
  // exact mode refuses the infinite universe
  bool refused = false;
  try {
    pipeline::run(p, psi, InstantiationMode::exact());
  } catch (const InstantiationError& e) {
    refused = e.kind == InstantiationError::Kind::InfiniteUniverse;
  }
  if (!refused) out.fail("exact mode did not refuse the infinite universe");
  std::string cm = r.countermodel;
  for (char& c : cm)
    if (c == '\n') c = ',';
  out.detail << "depth 3 countermodel {" << cm << "}, labeled \"" << pipeline::kBoundedLabel << "\"";
}

// ---------------------------------------------------------------- A7

void a7(Outcome& out) {
  Rng rng(707);
  auto atoms = testing::atom_names(4);
  for (int n = 0; n < kA7Trials; ++n) {
    PropFormula f = testing::random_prop(rng, atoms, 5);
    ht::Interpretation i = testing::random_interpretation(rng, atoms);
    const bool h = ht::satisfies(i, ht::World::Here, f);
    const bool t = ht::satisfies(i, ht::World::There, f);
    if (h && !t) out.fail("persistence: " + f.to_string());
    const int v = testing::g3(i, f);
    if (ht::g3_eval(i, f) != v || h != (v == 2) || t != (v >= 1)) out.fail("g3: " + f.to_string());
  }
  out.detail << kA7Trials << " (interpretation, formula) pairs";
}

// ---------------------------------------------------------------- A8

void a8(Outcome& out) {
  kernel::Proof p = kernel::parse_proof(read_file(in_corpus("classical.proof")));
  try {
    kernel::check_proof(p);
    out.fail("classical.proof accepted");
  } catch (const kernel::ProofError& e) {
    if (e.kind != kernel::ErrorKind::SchemaMismatch) out.fail(std::string("wrong error: ") + e.what());
    out.detail << "classical.proof: " << e.what() << "; ";
  }
  if (ht::ht_valid(parse_prop_formula("not not p -> p")).valid) out.fail("dne instance is HT-valid");
  for (const char* text : {"pred P/1.\nforall x P(x)", "pred P/0.\nP -> P", "fn f/1. pred P/1.\nforall x P(f(x))"}) {
    try {
      parse_formula_document(text);
      out.fail(std::string("empty signature accepted: ") + text);
    } catch (const Error&) {
    }
  }
  out.detail << "empty signatures rejected";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: hhtkit-acceptance <corpus-dir> [criteria...]\n";
    return 2;
  }
  corpus_dir = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5}, {"A6", a6}, {"A7", a7}, {"A8", a8}};
  std::vector<std::string> only(argv + 2, argv + argc);

  bool all = true;
  for (const auto& [id, check] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << id << " " << (out.pass ? "PASS" : "FAIL") << "  " << out.detail.str() << " [" << secs << " s]\n";
    for (const auto& f : out.failures) std::cout << "    " << f << "\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
