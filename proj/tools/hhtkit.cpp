// hhtkit command-line front end.
//
// Exit codes: 0 success / valid (exact mode only), 1 rejected proof or
// countermodel or any bounded run, 2 usage, format or evaluation error.

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhtkit/herbrand.hpp"
#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/kernel.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/pipeline.hpp"
#include "hhtkit/transform.hpp"

using json = nlohmann::ordered_json;
using namespace hhtkit;

namespace {

struct Options {
  bool json = false;
  std::optional<int> depth;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  std::size_t max_atoms = 20;
};

int emit(const Options& o, const json& doc, const std::string& text, int code) {
  if (o.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

InstantiationMode mode_of(const Options& o) {
  return o.depth ? InstantiationMode::bounded(*o.depth) : InstantiationMode::exact();
}

json stats_json(const pipeline::InstanceStats& s) {
  return {{"atoms", s.atoms}, {"rank", s.rank}, {"nodes", s.nodes}};
}

json proof_error_json(const kernel::ProofError& e) {
  return {{"kind", kernel::kind_name(e.kind)},
          {"line", e.label},
          {"justification", e.justification},
          {"condition", e.condition},
          {"message", e.what()}};
}

ht::ValidityOptions validity_options(const Options& o) {
  return ht::ValidityOptions{o.max_atoms, o.threads};
}

int check_proof(const Options& o, const std::string& path) {
  kernel::Proof p = kernel::parse_proof(read_file(path));
  json doc{{"command", "check-proof"}, {"file", path}, {"level", kernel::level_name(p.level)}, {"lines", p.lines.size()}};
  try {
    Formula c = kernel::check_proof(p);
    doc["accepted"] = true;
    doc["conclusion"] = c.to_string();
    return emit(o, doc,
                "accepted at level " + std::string(kernel::level_name(p.level)) + " (" + std::to_string(p.lines.size()) +
                    " lines)\nconclusion: " + c.to_string() + "\n",
                0);
  } catch (const kernel::ProofError& e) {
    doc["accepted"] = false;
    doc["error"] = proof_error_json(e);
    return emit(o, doc, std::string("rejected\n") + e.what() + "\n", 1);
  }
}

int instantiate_cmd(const Options& o, const std::string& fof, const std::string& subst) {
  FormulaDocument d = parse_formula_document(read_file(fof));
  Substitution psi = parse_substitution(read_file(subst));
  const InstantiationMode mode = mode_of(o);
  PropFormula inst = instantiate(psi, d.formula, mode);
  auto s = pipeline::instance_stats(inst);
  json doc{{"command", "instantiate"}, {"formula", d.formula.to_string()}, {"mode", mode.to_string()},
           {"approximate", !mode.is_exact()}, {"instance", inst.to_string()}, {"stats", stats_json(s)}};
  std::string text;
  if (!mode.is_exact()) text += std::string(pipeline::kBoundedLabel) + "\n";
  text += inst.to_string() + "\n";
  text += "# " + std::to_string(s.atoms) + " atoms, rank " + std::to_string(s.rank) + ", " + std::to_string(s.nodes) +
          " nodes\n";
  return emit(o, doc, text, 0);
}

int ht_valid_cmd(const Options& o, const std::string& path, bool countermodel_only) {
  PropFormula f = parse_prop_formula(read_file(path));
  ht::ValidityResult r = ht::ht_valid(f, validity_options(o));
  json doc{{"command", countermodel_only ? "countermodel" : "ht-valid"},
           {"formula", f.to_string()},
           {"valid", r.valid},
           {"atoms", r.atoms},
           {"checked", r.interpretations_checked}};
  std::string text;
  if (r.valid) {
    text = countermodel_only ? "no countermodel: formula is HT-valid\n" : "valid\n";
  } else {
    const std::string cm = ht::render(*r.countermodel, r.atoms);
    doc["countermodel"] = cm;
    doc["index"] = r.index;
    text = (countermodel_only ? "" : "not valid; countermodel:\n") + cm;
  }
  return emit(o, doc, text, r.valid ? 0 : 1);
}

int eliminate_cmd(const Options& o, const std::string& path) {
  FormulaDocument d = parse_formula_document(read_file(path));
  Formula e = eliminate_restrictors(d.formula);
  json doc{{"command", "eliminate-restrictors"}, {"formula", d.formula.to_string()}, {"result", e.to_string()}};
  return emit(o, doc, e.to_string() + "\n", 0);
}

int herbrand_cmd(const Options& o, const std::string& path) {
  FormulaDocument d = parse_formula_document(read_file(path));
  const InstantiationMode mode = mode_of(o);
  const std::uint64_t budget = o.budget.value_or(herbrand::default_budget());
  herbrand::ValidityResult r = herbrand::hht_valid_bruteforce(d.signature, d.formula, budget, mode);
  json doc{{"command", "herbrand-check"}, {"formula", d.formula.to_string()}, {"mode", mode.to_string()},
           {"approximate", r.approximate}, {"valid", r.valid}, {"base_size", r.base.size()},
           {"estimated_cost", r.estimated_cost}};
  std::string text;
  if (r.approximate) text += std::string(pipeline::kBoundedLabel) + "\n";
  if (r.valid) {
    text += "HHT-valid over a Herbrand base of " + std::to_string(r.base.size()) + " atoms\n";
  } else {
    const std::string cm = herbrand::render(*r.countermodel, r.base);
    doc["countermodel"] = cm;
    text += "not HHT-valid; countermodel:\n" + cm;
  }
  return emit(o, doc, text, r.valid && !r.approximate ? 0 : 1);
}

int pipeline_cmd(const Options& o, const std::string& proof_path, const std::string& subst_path) {
  kernel::Proof p = kernel::parse_proof(read_file(proof_path));
  Substitution psi = parse_substitution(read_file(subst_path));
  pipeline::Report r = pipeline::run(p, psi, mode_of(o), validity_options(o));
  json doc{{"command", "pipeline"}, {"proof", proof_path}, {"substitution", subst_path}, {"level", r.level},
           {"proof_accepted", r.proof_accepted}};
  if (r.proof_error)
    doc["proof_error"] = {{"kind", kernel::kind_name(r.proof_error->kind)},
                          {"line", r.proof_error->label},
                          {"justification", r.proof_error->justification},
                          {"condition", r.proof_error->condition},
                          {"message", r.proof_error->message}};
  if (r.proof_accepted) {
    doc["conclusion"] = r.conclusion;
    doc["mode"] = r.mode;
    doc["approximate"] = r.approximate;
    if (r.approximate) doc["note"] = pipeline::kBoundedLabel;
    if (r.stats) doc["stats"] = stats_json(*r.stats);
    if (r.valid) doc["valid"] = *r.valid;
    if (!r.countermodel.empty()) doc["countermodel"] = r.countermodel;
  }
  json t = json::object();
  for (const auto& s : r.timings) t[s.stage + "_ms"] = s.milliseconds;
  doc["timing"] = t;
  doc["exit_code"] = r.exit_code();
  return emit(o, doc, r.to_text(), r.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hhtkit: proofs in HHT and HT-validity of infinitary instances"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "emit a JSON report");
  app.add_option("--threads", o.threads, "worker threads for HT-validity enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--max-atoms", o.max_atoms, "largest atom count ht-valid will enumerate")->check(CLI::Range(1, 40));

  std::string a, b;
  auto* cp = app.add_subcommand("check-proof", "check a proof file");
  cp->add_option("proof", a, "proof file")->required();
  auto* in = app.add_subcommand("instantiate", "instance of a formula under a substitution");
  in->add_option("formula", a, "formula file (.fof)")->required();
  in->add_option("subst", b, "substitution file (.subst)")->required();
  in->add_option("--depth", o.depth, "bounded mode: ground terms of depth <= d")->check(CLI::NonNegativeNumber);
  auto* hv = app.add_subcommand("ht-valid", "HT-validity of a propositional formula");
  hv->add_option("formula", a, "propositional formula file (.prop)")->required();
  auto* cm = app.add_subcommand("countermodel", "first countermodel in canonical order");
  cm->add_option("formula", a, "propositional formula file (.prop)")->required();
  auto* er = app.add_subcommand("eliminate-restrictors", "replace generalized variables by guards");
  er->add_option("formula", a, "formula file (.fof)")->required();
  auto* hc = app.add_subcommand("herbrand-check", "HHT-validity by enumerating Herbrand HT-interpretations");
  hc->add_option("formula", a, "formula file (.fof)")->required();
  hc->add_option("--budget", o.budget, "evaluation budget (default 1e6 or HHTKIT_BUDGET)");
  hc->add_option("--depth", o.depth, "bounded mode: ground terms of depth <= d")->check(CLI::NonNegativeNumber);
  auto* pl = app.add_subcommand("pipeline", "check a proof, instantiate its conclusion, test the instance");
  pl->add_option("proof", a, "proof file")->required();
  pl->add_option("subst", b, "substitution file")->required();
  pl->add_option("--depth", o.depth, "bounded mode: ground terms of depth <= d")->check(CLI::NonNegativeNumber);
  for (auto* sub : {cp, in, hv, cm, er, hc, pl}) {
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string file = a;
  try {
    if (*cp) return check_proof(o, a);
    if (*in) return instantiate_cmd(o, a, b);
    if (*hv) return ht_valid_cmd(o, a, false);
    if (*cm) return ht_valid_cmd(o, a, true);
    if (*er) return eliminate_cmd(o, a);
    if (*hc) return herbrand_cmd(o, a);
    if (*pl) return pipeline_cmd(o, a, b);
  } catch (const ParseError& e) {
    std::cerr << "hhtkit: parse error: " << e.what() << "\n";
  } catch (const InstantiationError& e) {
    std::cerr << "hhtkit: " << kind_name(e.kind) << ": " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    std::cerr << "hhtkit: budget exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "hhtkit: " << e.what() << "\n";
  }
  return 2;
}
