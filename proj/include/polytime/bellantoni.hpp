#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "polytime/bitstring.hpp"
#include "polytime/mpoly.hpp"

namespace polytime {

// Normal/safe argument counts of a B expression.
struct BArity {
  std::size_t normal = 0;
  std::size_t safe = 0;

  bool operator==(const BArity&) const = default;
};

// Deep embedding of Bellantoni-Cook's class B (annotated syntax).
struct BExpr;
using BExprPtr = std::shared_ptr<const BExpr>;

struct BExpr {
  struct Zero {};
  struct Proj {
    // Position in the concatenation normals,safes: index < normal selects a
    // normal argument, otherwise safe argument index - normal.
    std::size_t index;
    std::size_t normal;
    std::size_t safe;
  };
  struct Succ {
    Bit bit;
  };
  struct Pred {};
  struct Cond {};
  struct Comp {
    std::size_t normal;
    std::size_t safe;
    BExprPtr h;
    std::vector<BExprPtr> gn;  // receive only the normal arguments
    std::vector<BExprPtr> gs;
  };
  struct Rec {
    BExprPtr g, h0, h1;
  };

  using Node = std::variant<Zero, Proj, Succ, Pred, Cond, Comp, Rec>;
  Node node;
};

BExprPtr b_zero();
BExprPtr b_proj(std::size_t i, std::size_t n, std::size_t s);
BExprPtr b_succ(Bit b);
BExprPtr b_pred();
BExprPtr b_cond();
BExprPtr b_comp(std::size_t n, std::size_t s, BExprPtr h,
                std::vector<BExprPtr> gn, std::vector<BExprPtr> gs);
BExprPtr b_rec(BExprPtr g, BExprPtr h0, BExprPtr h1);

// Length addition on notations: plus(x; y) = y followed by |x| ones, so
// |plus(x;y)| = |x| + |y|. Arity (1, 1).
BExprPtr b_plus();

// Length multiplication: |mult(x,y;)| = |x| * |y|. Arity (2, 0).
BExprPtr b_mult();

// Constant "1" with one ignored normal and one ignored safe argument.
BExprPtr b_one();

// Arity rules; throws IllFormed naming the offending subterm.
BArity arity_b(const BExprPtr& e);

Bitstring eval_b(const BExprPtr& e, const ArgVector& normals,
                 const ArgVector& safes);

struct TimedResult {
  Bitstring value;
  std::uint64_t cost = 0;  // abstract step count, >= 1
};

// Same value as eval_b; cost charges 1 per primitive application, comp is
// additive over the argument evaluations plus h, rec charges g plus every
// step taken.
TimedResult eval_b_timed(const BExprPtr& e, const ArgVector& normals,
                         const ArgVector& safes);

// Polymax bound (normal variables only):
// |eval_b(e, x, y)| <= pol_b(e)(|x|) + max_i |y_i|.
MPoly pol_b(const BExprPtr& e);

// Running-time bound over normal variables: eval_b_timed cost <= pol_time.
MPoly pol_time(const BExprPtr& e);

// Unary encoding with arity (P.num_vars, 0):
// |eval_b(poly_to_b(P), x, <>)| = P(|x|) exactly.
BExprPtr poly_to_b(const MPoly& p);

// F/G pair for strict-PPT accounting: size_bound = 1 + 2*[pol_b(e)],
// time_bound = [pol_time(e)], both univariate collapses.
struct Envelope {
  UPoly size_bound;
  UPoly time_bound;
};
Envelope ppt_envelope(const BExprPtr& e);

std::size_t node_count(const BExprPtr& e);
bool structurally_equal(const BExprPtr& a, const BExprPtr& b);

// Arity-free syntax: projections carry only their index within the normal or
// safe zone, and comp carries no counts.
struct BInfExpr;
using BInfExprPtr = std::shared_ptr<const BInfExpr>;

struct BInfExpr {
  struct Zero {};
  struct ProjN {
    std::size_t index;
  };
  struct ProjS {
    std::size_t index;
  };
  struct Succ {
    Bit bit;
  };
  struct Pred {};
  struct Cond {};
  struct Comp {
    BInfExprPtr h;
    std::vector<BInfExprPtr> gn;
    std::vector<BInfExprPtr> gs;
  };
  struct Rec {
    BInfExprPtr g, h0, h1;
  };

  using Node = std::variant<Zero, ProjN, ProjS, Succ, Pred, Cond, Comp, Rec>;
  Node node;
};

BInfExprPtr binf_zero();
BInfExprPtr binf_proj_n(std::size_t i);
BInfExprPtr binf_proj_s(std::size_t i);
BInfExprPtr binf_succ(Bit b);
BInfExprPtr binf_pred();
BInfExprPtr binf_cond();
BInfExprPtr binf_comp(BInfExprPtr h, std::vector<BInfExprPtr> gn,
                      std::vector<BInfExprPtr> gs);
BInfExprPtr binf_rec(BInfExprPtr g, BInfExprPtr h0, BInfExprPtr h1);

// Annotates e with the pointwise-minimal satisfying arity, raised to at least
// `floor` when given. Throws InferError when the constraints are
// unsatisfiable (including an Exact top-level arity below the floor).
BExprPtr infer(const BInfExprPtr& e, std::optional<BArity> floor);

// Drops all arity annotations; inverse of infer up to tree shape.
BInfExprPtr erase(const BExprPtr& e);

bool structurally_equal(const BInfExprPtr& a, const BInfExprPtr& b);

}  // namespace polytime
