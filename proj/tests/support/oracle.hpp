// Reference evaluators written independently of the library.
#ifndef HHTKIT_TESTS_ORACLE_HPP
#define HHTKIT_TESTS_ORACLE_HPP

#include <algorithm>

#include "hhtkit/ht.hpp"
#include "hhtkit/prop.hpp"

namespace hhtkit::testing {

// Three-valued Goedel evaluation: 2 here, 1 there only, 0 absent.
inline int g3(const ht::Interpretation& i, const PropFormula& f) {
  switch (f.kind()) {
    case PropFormula::Kind::Atom:
      return i.here().count(f.name()) ? 2 : i.there().count(f.name()) ? 1 : 0;
    case PropFormula::Kind::And: {
      int v = 2;
      for (const auto& c : f.children()) v = std::min(v, g3(i, c));
      return v;
    }
    case PropFormula::Kind::Or: {
      int v = 0;
      for (const auto& c : f.children()) v = std::max(v, g3(i, c));
      return v;
    }
    case PropFormula::Kind::Implies: {
      int a = g3(i, f.lhs()), b = g3(i, f.rhs());
      return a <= b ? 2 : b;
    }
  }
  return 0;
}

}  // namespace hhtkit::testing

#endif  // HHTKIT_TESTS_ORACLE_HPP
