#ifndef HHTKIT_TRANSFORM_HPP
#define HHTKIT_TRANSFORM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hhtkit/syntax.hpp"

namespace hhtkit {

using VariableSet = std::set<Variable>;

// Object and function variables of a term.
VariableSet term_variables(const Term& t);
VariableSet free_variables(const Formula& f);
bool occurs_free(const Formula& f, const Variable& v);
bool is_closed(const Formula& f);
// No predicate or function variables anywhere, bound or free.
bool is_first_order(const Formula& f);
bool has_restrictors(const Formula& f);
// Number of nested connectives and quantifiers on the longest branch; atoms have depth 0.
int formula_depth(const Formula& f);

struct SubstitutionResult {
  Formula result;
  // False when some inserted variable would be captured by a quantifier of f.
  bool substitutable = true;
};

// F^v_t: replaces the free occurrences of the object variable v by t.
SubstitutionResult substitute_term(const Formula& f, const Variable& v, const Term& t);
// As above but throws CaptureViolation if t is not substitutable for v in f.
Formula substitute_term_checked(const Formula& f, const Variable& v, const Term& t);
Term substitute_in_term(const Term& t, const std::string& var, const Term& replacement);

// Replaces free occurrences of a predicate or function variable v by the
// variable w of the same sort and arity.
SubstitutionResult substitute_variable(const Formula& f, const Variable& v, const Variable& w);

// G{p <= lambda x1..xn. F}: every free occurrence p(t1..tn) becomes F with the
// ti substituted simultaneously for the xi.
SubstitutionResult substitute_predicate(const Formula& f, const Variable& p, const std::vector<Variable>& params,
                                        const Formula& body);

// Replaces every generalized-variable quantifier by its restrictor-free form.
Formula eliminate_restrictors(const Formula& f);

// Equality up to renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

// Prefixes universal quantifiers for every free variable (in VariableSet order,
// first element outermost).
Formula universal_closure(const Formula& f);

}  // namespace hhtkit

#endif  // HHTKIT_TRANSFORM_HPP
