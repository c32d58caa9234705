#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polytime/bellantoni.hpp"
#include "polytime/cobham.hpp"

namespace polytime {

enum class FnClass { C, B };

// A named function in one of the two classes, paired with an independent
// executable oracle for differential testing. For class C the oracle ignores
// its safe vector.
struct Def {
  std::string name;
  FnClass cls = FnClass::C;
  CExprPtr c_expr;   // set iff cls == C
  BExprPtr b_expr;   // set iff cls == B
  std::size_t c_arity = 0;
  BArity b_arity;
  std::function<Bitstring(const ArgVector&, const ArgVector&)> oracle;
  std::string doc;
};

// Registry in deterministic order; built once.
const std::vector<Def>& all_defs();

// Throws LookupError for unknown names.
const Def& lookup(const std::string& name);

}  // namespace polytime
