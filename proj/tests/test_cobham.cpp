#include <doctest.h>

#include "polytime/cobham.hpp"
#include "polytime/errors.hpp"
#include "support/testutil.hpp"

using namespace polytime;
using testutil::Rng;

namespace {

Bitstring run(const CExprPtr& e, std::initializer_list<const char*> args) {
  ArgVector v;
  for (const char* a : args) v.push_back(parse_literal(a));
  return eval_c(e, v);
}

}  // namespace

TEST_CASE("arity rules") {
  CHECK(arity_c(c_zero()) == 0);
  CHECK(arity_c(c_proj(1, 3)) == 3);
  CHECK(arity_c(c_succ(Bit::b0)) == 1);
  CHECK(arity_c(c_smash()) == 2);
  CHECK(arity_c(c_pred()) == 1);
  CHECK(arity_c(c_comp(4, c_smash(), {c_proj(0, 4), c_proj(3, 4)})) == 4);

  CHECK_THROWS_AS(arity_c(c_proj(3, 2)), IllFormed);
  // |g| must equal A(h)
  CHECK_THROWS_AS(arity_c(c_comp(1, c_smash(), {c_proj(0, 1)})), IllFormed);
  // every g must have the annotated arity
  CHECK_THROWS_AS(arity_c(c_comp(2, c_succ(Bit::b0), {c_proj(0, 1)})),
                  IllFormed);
  // A(j) must be A(g) + 1
  CHECK_THROWS_AS(
      arity_c(c_rec(c_zero(), c_proj(0, 2), c_proj(0, 2), c_zero())),
      IllFormed);

  try {
    arity_c(c_rec(c_zero(), c_proj(0, 2), c_proj(5, 2), c_proj(0, 1)));
    FAIL("expected IllFormed");
  } catch (const IllFormed& e) {
    CHECK(e.path == "rec.h1");
  }
}

TEST_CASE("primitive semantics") {
  CHECK(render_literal(run(c_zero(), {})) == "eps");
  CHECK(render_literal(run(c_proj(1, 2), {"10", "011"})) == "011");
  CHECK(render_literal(run(c_succ(Bit::b1), {"10"})) == "101");
  CHECK(render_literal(run(c_succ(Bit::b0), {"eps"})) == "0");
  // #(x, y) = 1 followed by |x| * |y| zeros
  CHECK(render_literal(run(c_smash(), {"10", "11"})) == "10000");
  CHECK(render_literal(run(c_smash(), {"eps", "1111"})) == "1");
  CHECK(render_literal(run(c_pred(), {"101"})) == "10");
  CHECK(render_literal(run(c_pred(), {"eps"})) == "eps");
}

TEST_CASE("recursion destructs the least significant bit") {
  // f(eps) = eps; f(y0) = y0 . 0; f(y1) = y1 . 1 -- tags each prefix by its
  // own low bit, exercising the h0/h1 dispatch order.
  CExprPtr dup0 = c_comp(2, c_succ(Bit::b0),
                         {c_comp(2, c_succ(Bit::b0), {c_proj(1, 2)})});
  CExprPtr dup1 = c_comp(2, c_succ(Bit::b1),
                         {c_comp(2, c_succ(Bit::b1), {c_proj(1, 2)})});
  CExprPtr j = c_comp(1, c_smash(),
                      {c_comp(1, c_succ(Bit::b1), {c_proj(0, 1)}),
                       c_comp(1, c_succ(Bit::b1), {c_proj(0, 1)})});
  CExprPtr f = c_rec(c_zero(), dup0, dup1, j);
  CHECK(render_literal(eval_c(f, {parse_literal("10")})) == "1100");
  CHECK(render_literal(eval_c_checked(f, {parse_literal("10")})) == "1100");
}

TEST_CASE("argument count is enforced at evaluation") {
  CHECK_THROWS_AS(eval_c(c_smash(), {parse_literal("1")}), EvalError);
}

TEST_CASE("checked evaluation reports bound violations") {
  // well formed, but g already breaks |f| <= |j| since j evaluates to eps
  CExprPtr g = c_comp(0, c_succ(Bit::b1), {c_zero()});
  CExprPtr bad = c_rec(g, c_proj(1, 2), c_proj(1, 2), c_comp(1, c_zero(), {}));
  CHECK(arity_c(bad) == 1);
  CHECK(render_literal(eval_c(bad, {parse_literal("1")})) == "1");
  try {
    eval_c_checked(bad, {parse_literal("1")});
    FAIL("expected BoundViolation");
  } catch (const BoundViolation& e) {
    CHECK(e.value_length == 1);
    CHECK(e.bound_length == 0);
    CHECK(e.path == "<root>");
    CHECK(e.inputs == "(eps)");
  }
}

TEST_CASE("pol_c recurrence") {
  CHECK(print_canonical(pol_c(c_smash())) == "x0*x1 + 1");
  CHECK(print_canonical(pol_c(c_zero())) == "0");
  CHECK(print_canonical(pol_c(c_succ(Bit::b1))) == "x0 + 1");
  CHECK(print_canonical(pol_c(c_proj(1, 3))) == "x1");
  // comp composes, rec reads j
  CExprPtr e = c_comp(1, c_smash(),
                      {c_succ(Bit::b0), c_succ(Bit::b1)});
  CHECK(print_canonical(pol_c(e)) == "x0^2 + 2*x0 + 2");
  CHECK(print_canonical(pol_c(c_pred())) == "x0");
}

TEST_CASE("proposition 1 on random expressions") {
  Rng rng(20260824);
  for (int i = 0; i < 60; ++i) {
    std::size_t arity = testutil::pick(rng, 0, 3);
    CExprPtr e = testutil::random_c_expr(rng, arity, 4);
    MPoly bound = pol_c(e);
    for (int k = 0; k < 5; ++k) {
      ArgVector args = testutil::random_args(rng, arity, 8);
      Bitstring v = eval_c_checked(e, args);
      Nat limit = eval(bound, testutil::to_nat_sizes(size_vector(args)));
      CHECK(Nat(v.length()) <= limit);
    }
  }
}

TEST_CASE("poly_to_c is an exact unary encoding") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    MPoly p = testutil::random_poly(rng, 2, 2, 3);
    CExprPtr e = poly_to_c(p);
    CHECK(arity_c(e) == p.num_vars());
    for (int k = 0; k < 5; ++k) {
      ArgVector args = testutil::random_args(rng, p.num_vars(), 6);
      Bitstring v = eval_c_checked(e, args);
      CHECK(Nat(v.length()) ==
            eval(p, testutil::to_nat_sizes(size_vector(args))));
    }
  }
}

TEST_CASE("structural helpers") {
  CExprPtr a = c_comp(1, c_succ(Bit::b1), {c_proj(0, 1)});
  CExprPtr b = c_comp(1, c_succ(Bit::b1), {c_proj(0, 1)});
  CExprPtr c = c_comp(1, c_succ(Bit::b0), {c_proj(0, 1)});
  CHECK(structurally_equal(a, b));
  CHECK(!structurally_equal(a, c));
  CHECK(node_count(a) == 3);
  CHECK(node_count(c_pred()) == 5);
}
