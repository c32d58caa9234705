#pragma once

#include <string>

#include "polytime/bellantoni.hpp"
#include "polytime/cobham.hpp"

namespace polytime {

// Concrete s-expression syntax, one class per source file:
//   program := def* expr?          def := (def NAME expr)
//   C:     O | (proj i n) | (succ 0|1) | smash
//            | (comp n h (g ...)) | (rec g h0 h1 j)
//   B:     zero | (pi i n s) | (succ 0|1) | pred | cond
//            | (comp n s h (gN ...) (gS ...)) | (rec g h0 h1)
//   B_inf: as B but (pn i) / (ps i) for projections and (comp h (gN ...)
//            (gS ...))
// ';' starts a line comment. Identifiers inline earlier defs; for C and B
// they also resolve to stdlib names. Each parser returns the program's main
// expression and throws ParseError (with 1-based line:column) otherwise.

CExprPtr parse_c_program(const std::string& text);
BExprPtr parse_b_program(const std::string& text);
BInfExprPtr parse_binf_program(const std::string& text);

std::string to_source(const CExprPtr& e);
std::string to_source(const BExprPtr& e);
std::string to_source(const BInfExprPtr& e);

}  // namespace polytime
