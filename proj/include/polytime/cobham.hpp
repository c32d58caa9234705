#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "polytime/bitstring.hpp"
#include "polytime/mpoly.hpp"

namespace polytime {

// Deep embedding of Cobham's class C. Expressions are immutable trees shared
// by pointer; all operations below are pure.
struct CExpr;
using CExprPtr = std::shared_ptr<const CExpr>;

struct CExpr {
  struct O {};
  struct Proj {
    std::size_t index;
    std::size_t arity;  // well formed iff index < arity
  };
  struct Succ {
    Bit bit;
  };
  struct Smash {};
  struct Comp {
    std::size_t arity;
    CExprPtr h;
    std::vector<CExprPtr> gs;
  };
  struct Rec {
    CExprPtr g, h0, h1, j;
  };

  using Node = std::variant<O, Proj, Succ, Smash, Comp, Rec>;
  Node node;
};

CExprPtr c_zero();
CExprPtr c_proj(std::size_t i, std::size_t n);
CExprPtr c_succ(Bit b);
CExprPtr c_smash();
CExprPtr c_comp(std::size_t n, CExprPtr h, std::vector<CExprPtr> gs);
CExprPtr c_rec(CExprPtr g, CExprPtr h0, CExprPtr h1, CExprPtr j);

// Removes the least significant bit: Rec O P0^2 P0^2 P0^1. Used by the
// translations, poly_to_c and the stdlib.
CExprPtr c_pred();

// Arity per the C rules; throws IllFormed naming the offending subterm.
std::size_t arity_c(const CExprPtr& e);

// Semantics. Rec is evaluated iteratively (one lsb peeled per step), so call
// depth follows the expression tree, not the input length.
Bitstring eval_c(const CExprPtr& e, const ArgVector& args);

// Same value, but verifies |f(y,x)| <= |j(y,x)| at every Rec node for every
// prefix y actually encountered; throws BoundViolation.
Bitstring eval_c_checked(const CExprPtr& e, const ArgVector& args);

// Length bound of Proposition 1: |eval_c(e, args)| <= pol_c(e)(sizes) for
// every e that satisfies RecBounded.
MPoly pol_c(const CExprPtr& e);

// Unary encoding: |eval_c(poly_to_c(P), args)| = P(sizes) exactly, and the
// result is RecBounded-clean.
CExprPtr poly_to_c(const MPoly& p);

std::size_t node_count(const CExprPtr& e);
bool structurally_equal(const CExprPtr& a, const CExprPtr& b);

}  // namespace polytime
