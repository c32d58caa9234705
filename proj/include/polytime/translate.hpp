#pragma once

#include "polytime/bellantoni.hpp"
#include "polytime/cobham.hpp"
#include "polytime/mpoly.hpp"

namespace polytime {

// Wraps e (arity n) into an expression of arity n+s that ignores its last s
// arguments.
CExprPtr c_dummies(std::size_t s, const CExprPtr& e);

// Argument permutation for translated recursion steps: the result, applied to
// (prefix, recursive value, normals, safes), applies e to
// (prefix, normals, recursive value, safes), where n_g is the normal count of
// the source recursion's base case.
CExprPtr move_arg(const CExprPtr& e, std::size_t n_g);

// B into C, erasing the normal/safe distinction:
// eval_c(b_to_c(e), x ++ y) = eval_b(e, x, y), and the synthesized Rec bounds
// pass eval_c_checked by construction.
CExprPtr b_to_c(const BExprPtr& e);

// Padding threshold polynomial for the C -> B simulation.
MPoly pol_c_to_b(const CExprPtr& e);

struct SimulationResult {
  BExprPtr expr;  // arity (1, arity_c(source))
  MPoly bound;    // = pol_c_to_b(source)
};

// Lemma-style simulation: for every x and every w with
// |w| >= eval(bound, sizes(x)), eval_b(expr, <w>, x) = eval_c(e, x).
// Requires e to satisfy RecBounded.
SimulationResult c_to_b_padded(const CExprPtr& e);

// P(a; b) removes the |a| least significant bits of b; arity (1, 1).
BExprPtr build_p();

// P'(a, b;) = P(a; b) with both arguments normal; arity (2, 0).
BExprPtr build_p_prime();

// Y(z, w; y) removes the |w| - |z| least significant bits of y; arity (2, 1).
BExprPtr build_y();

// The simulated-recursion core: given the already-translated images of
// g/h0/h1 (arities (1, m-1) and (1, m+1)), builds fhat of arity (2, m) with
// fhat(z, w; y, x) = f(y', x) where y' is y with |w| - |z| bits removed.
BExprPtr build_fhat(const BExprPtr& gp, const BExprPtr& h0p,
                    const BExprPtr& h1p);

// Smash via double recursion; arity (1, 2), padded semantics of #.
BExprPtr build_smash_b();

// Raises the arity of e by dn ignored normal and ds ignored safe arguments;
// the new safe arguments come first.
BExprPtr b_dummies(std::size_t dn, std::size_t ds, const BExprPtr& e);

// Theorem-style closed form: arity (arity_c(e), 0) and
// eval_b(result, x, <>) = eval_c(e, x); the padding argument is computed
// internally by an exact unary encoding of pol_c_to_b(e).
BExprPtr c_to_b_closed(const CExprPtr& e);

}  // namespace polytime
