#ifndef HHTKIT_PIPELINE_HPP
#define HHTKIT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hhtkit/ht.hpp"
#include "hhtkit/instantiate.hpp"
#include "hhtkit/kernel.hpp"

namespace hhtkit::pipeline {

inline constexpr const char* kBoundedLabel = "bounded mode: non-validity-preserving";

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct InstanceStats {
  std::size_t atoms = 0;
  int rank = 0;
  std::size_t nodes = 0;
};

struct ProofFailure {
  kernel::ErrorKind kind;
  int label = 0;
  std::string justification;
  std::string condition;
  std::string message;
};

// Proof check, instantiation and HT-validity of the instance, in that order;
// a stage runs only when the previous one succeeded.
struct Report {
  std::string level;
  std::size_t proof_lines = 0;
  bool proof_accepted = false;
  std::optional<ProofFailure> proof_error;
  std::string conclusion;
  std::string mode;
  bool approximate = false;
  std::optional<InstanceStats> stats;
  std::optional<bool> valid;
  std::vector<std::string> atoms;
  std::string countermodel;  // rendered, empty when valid
  std::vector<StageTiming> timings;

  // 0 only for an exact-mode certificate; 1 for a rejected proof, a
  // countermodel or any bounded run.
  int exit_code() const;
  std::string to_text() const;
};

// The proof re-targeted to another signature. Throws SignatureError when a
// symbol of the proof is not declared in `sig` with the same kind and arity.
kernel::Proof rebase(const kernel::Proof& proof, const Signature& sig);

// Instantiation errors and BudgetExceeded propagate as exceptions. The proof
// is checked as written and again over the substitution's signature when the
// two differ.
Report run(const kernel::Proof& proof, const Substitution& psi, InstantiationMode mode,
           const ht::ValidityOptions& options = {});

InstanceStats instance_stats(const PropFormula& f);

}  // namespace hhtkit::pipeline

#endif  // HHTKIT_PIPELINE_HPP
