// Python bindings. Inputs are the text of the corresponding file formats;
// results are plain dicts.
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hhtkit/herbrand.hpp"
#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/kernel.hpp"
#include "hhtkit/parser.hpp"
#include "hhtkit/pipeline.hpp"
#include "hhtkit/transform.hpp"

namespace py = pybind11;
using namespace hhtkit;

namespace {

InstantiationMode mode_of(std::optional<int> depth) {
  return depth ? InstantiationMode::bounded(*depth) : InstantiationMode::exact();
}

py::dict proof_error_dict(kernel::ErrorKind kind, int line, const std::string& just, const std::string& cond,
                          const std::string& message) {
  py::dict d;
  d["kind"] = kernel::kind_name(kind);
  d["line"] = line;
  d["justification"] = just;
  d["condition"] = cond;
  d["message"] = message;
  return d;
}

py::dict ht_valid(const std::string& text, std::size_t max_atoms, unsigned threads) {
  PropFormula f = parse_prop_formula(text);
  ht::ValidityResult r = ht::ht_valid(f, {max_atoms, threads});
  py::dict d;
  d["valid"] = r.valid;
  d["atoms"] = r.atoms;
  d["countermodel"] = r.countermodel ? py::cast(ht::render(*r.countermodel, r.atoms)) : py::none();
  d["index"] = r.index;
  return d;
}

py::dict check_proof(const std::string& text) {
  kernel::Proof p = kernel::parse_proof(text);
  py::dict d;
  d["level"] = kernel::level_name(p.level);
  d["lines"] = p.lines.size();
  try {
    d["conclusion"] = kernel::check_proof(p).to_string();
    d["accepted"] = true;
    d["error"] = py::none();
  } catch (const kernel::ProofError& e) {
    d["accepted"] = false;
    d["conclusion"] = py::none();
    d["error"] = proof_error_dict(e.kind, e.label, e.justification, e.condition, e.what());
  }
  return d;
}

std::string instantiate_text(const std::string& fof, const std::string& subst, std::optional<int> depth) {
  FormulaDocument d = parse_formula_document(fof);
  return instantiate(parse_substitution(subst), d.formula, mode_of(depth)).to_string();
}

std::string eliminate(const std::string& fof) {
  return eliminate_restrictors(parse_formula_document(fof).formula).to_string();
}

py::dict herbrand_check(const std::string& fof, std::optional<std::uint64_t> budget, std::optional<int> depth) {
  FormulaDocument doc = parse_formula_document(fof);
  auto r = herbrand::hht_valid_bruteforce(doc.signature, doc.formula, budget.value_or(herbrand::default_budget()),
                                          mode_of(depth));
  py::dict d;
  d["valid"] = r.valid;
  d["approximate"] = r.approximate;
  d["base_size"] = r.base.size();
  d["countermodel"] = r.countermodel ? py::cast(herbrand::render(*r.countermodel, r.base)) : py::none();
  return d;
}

py::dict run_pipeline(const std::string& proof, const std::string& subst, std::optional<int> depth) {
  pipeline::Report r = pipeline::run(kernel::parse_proof(proof), parse_substitution(subst), mode_of(depth));
  py::dict d;
  d["level"] = r.level;
  d["proof_accepted"] = r.proof_accepted;
  d["proof_error"] = r.proof_error ? py::object(proof_error_dict(r.proof_error->kind, r.proof_error->label,
                                                                 r.proof_error->justification,
                                                                 r.proof_error->condition, r.proof_error->message))
                                   : py::none();
  d["conclusion"] = r.conclusion;
  d["mode"] = r.mode;
  d["approximate"] = r.approximate;
  d["valid"] = r.valid ? py::cast(*r.valid) : py::none();
  d["countermodel"] = r.countermodel;
  d["exit_code"] = r.exit_code();
  d["text"] = r.to_text();
  return d;
}

std::vector<std::string> schemas(const std::string& level) {
  auto l = kernel::parse_level(level);
  if (!l) throw py::value_error("unknown level '" + level + "' (expected HHT, HHT2 or HHT2+DCA)");
  std::vector<std::string> out;
  for (const auto& s : kernel::list_schemas(*l)) out.push_back(s.id);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hhtkit, m) {
  m.doc() = "Proof checking in HHT and HT-validity of instances";
  // translators run newest first, so the base class is registered first
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<InstantiationError>(m, "InstantiationError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);

  m.attr("BOUNDED_LABEL") = pipeline::kBoundedLabel;
  m.def("ht_valid", &ht_valid, py::arg("formula"), py::arg("max_atoms") = 20, py::arg("threads") = 1);
  m.def("check_proof", &check_proof, py::arg("proof"));
  m.def("instantiate", &instantiate_text, py::arg("formula"), py::arg("substitution"), py::arg("depth") = py::none());
  m.def("eliminate_restrictors", &eliminate, py::arg("formula"));
  m.def("herbrand_check", &herbrand_check, py::arg("formula"), py::arg("budget") = py::none(),
        py::arg("depth") = py::none());
  m.def("pipeline", &run_pipeline, py::arg("proof"), py::arg("substitution"), py::arg("depth") = py::none());
  m.def("list_schemas", &schemas, py::arg("level") = "HHT");
}
