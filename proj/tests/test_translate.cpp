#include <doctest.h>

#include "polytime/errors.hpp"
#include "polytime/translate.hpp"
#include "support/testutil.hpp"

using namespace polytime;
using testutil::Rng;

namespace {

Bitstring lit(const char* s) { return parse_literal(s); }

Bitstring pad(std::size_t len) {
  return Bitstring(std::vector<Bit>(len, Bit::b0));
}

}  // namespace

TEST_CASE("b_to_c on primitives") {
  CHECK(structurally_equal(b_to_c(b_pred()), c_pred()));
  CHECK(structurally_equal(b_to_c(b_zero()), c_zero()));
  CHECK(structurally_equal(b_to_c(b_proj(1, 1, 2)), c_proj(1, 3)));

  CExprPtr cond_c = b_to_c(b_cond());
  CHECK(arity_c(cond_c) == 4);
  ArgVector base{lit("eps"), lit("1"), lit("00"), lit("11")};
  CHECK(render_literal(eval_c_checked(cond_c, base)) == "1");
  base[0] = lit("10");
  CHECK(render_literal(eval_c_checked(cond_c, base)) == "00");
  base[0] = lit("11");
  CHECK(render_literal(eval_c_checked(cond_c, base)) == "11");
}

TEST_CASE("b_to_c concatenates normals before safes") {
  CExprPtr plus_c = b_to_c(b_plus());
  CHECK(arity_c(plus_c) == 2);
  CHECK(render_literal(eval_c_checked(plus_c, {lit("11"), lit("0")})) ==
        "011");
  CExprPtr mult_c = b_to_c(b_mult());
  CHECK(eval_c_checked(mult_c, {lit("10"), lit("111")}).length() == 6);
}

TEST_CASE("b_to_c agrees with the source on random expressions") {
  Rng rng(31337);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = testutil::pick(rng, 0, 2);
    std::size_t s = testutil::pick(rng, 0, 2);
    BExprPtr e = testutil::random_b_expr(rng, n, s, 3);
    CExprPtr c = b_to_c(e);
    CHECK(arity_c(c) == n + s);
    for (int k = 0; k < 4; ++k) {
      ArgVector normals = testutil::random_args(rng, n, 6);
      ArgVector safes = testutil::random_args(rng, s, 6);
      ArgVector joined = normals;
      joined.insert(joined.end(), safes.begin(), safes.end());
      CHECK(eval_c_checked(c, joined) == eval_b(e, normals, safes));
    }
  }
}

TEST_CASE("c_dummies and move_arg bookkeeping") {
  CExprPtr wide = c_dummies(1, c_smash());
  CHECK(arity_c(wide) == 3);
  CHECK(render_literal(eval_c(wide, {lit("1"), lit("1"), lit("111")})) ==
        "10");
  CHECK(structurally_equal(c_dummies(0, c_smash()),
                           c_comp(2, c_smash(), {c_proj(0, 2), c_proj(1, 2)})));
  // move_arg(e, 1) swaps positions 1 and 2
  CExprPtr moved = move_arg(c_proj(1, 3), 1);
  CHECK(arity_c(moved) == 3);
  CHECK(render_literal(eval_c(moved, {lit("0"), lit("1"), lit("10")})) ==
        "10");
  CHECK_THROWS_AS(move_arg(c_succ(Bit::b0), 1), IllFormed);
}

TEST_CASE("pol_c_to_b thresholds") {
  CHECK(print_canonical(pol_c_to_b(c_smash())) == "x0 + 2*x1 + 18");
  CHECK(print_canonical(pol_c_to_b(c_zero())) == "0");
  CHECK(print_canonical(pol_c_to_b(c_proj(0, 2))) == "0");
  CHECK(print_canonical(pol_c_to_b(c_comp(1, c_succ(Bit::b1),
                                          {c_proj(0, 1)}))) == "0");
}

TEST_CASE("padding combinators") {
  BExprPtr P = build_p();
  CHECK(arity_b(P) == BArity{1, 1});
  CHECK(render_literal(eval_b(P, {lit("11")}, {lit("1010")})) == "10");
  CHECK(render_literal(eval_b(P, {lit("eps")}, {lit("1010")})) == "1010");

  BExprPtr Pp = build_p_prime();
  CHECK(arity_b(Pp) == BArity{2, 0});
  CHECK(render_literal(eval_b(Pp, {lit("11"), lit("1010")}, {})) == "10");

  BExprPtr Y = build_y();
  CHECK(arity_b(Y) == BArity{2, 1});
  CHECK(render_literal(eval_b(Y, {lit("1"), lit("111")}, {lit("1010")})) ==
        "10");
  CHECK(render_literal(eval_b(Y, {lit("111"), lit("111")}, {lit("1010")})) ==
        "1010");
}

TEST_CASE("padded smash") {
  BExprPtr sm = build_smash_b();
  CHECK(arity_b(sm) == BArity{1, 2});
  MPoly bound = pol_c_to_b(c_smash());
  Nat need = eval(bound, {Nat(2), Nat(2)});
  CHECK(render_literal(eval_b(
            sm, {pad(static_cast<std::size_t>(need))},
            {lit("10"), lit("11")})) == "10000");
}

TEST_CASE("padded simulation is stable above the threshold") {
  Rng rng(271828);
  std::vector<CExprPtr> samples = {
      c_proj(0, 2),
      c_succ(Bit::b1),
      c_smash(),
      c_pred(),
      lookup("succ_c").c_expr,
      c_comp(2, c_smash(),
             {c_proj(1, 2), c_comp(2, c_succ(Bit::b0), {c_proj(0, 2)})}),
  };
  for (const CExprPtr& e : samples) {
    std::size_t arity = arity_c(e);
    SimulationResult sim = c_to_b_padded(e);
    CHECK(arity_b(sim.expr) == BArity{1, arity});
    CHECK(print_canonical(sim.bound) == print_canonical(pol_c_to_b(e)));
    for (int k = 0; k < 4; ++k) {
      ArgVector args = testutil::random_args(rng, arity, 5);
      Bitstring expected = eval_c(e, args);
      Nat need = eval(sim.bound, testutil::to_nat_sizes(size_vector(args)));
      for (std::size_t extra : {0u, 1u, 5u}) {
        Bitstring w = pad(static_cast<std::size_t>(need) + extra);
        CHECK(eval_b(sim.expr, {w}, args) == expected);
      }
    }
  }
}

TEST_CASE("closed-form simulation drops the padding argument") {
  Rng rng(1618);
  CExprPtr succ_c = lookup("succ_c").c_expr;
  BExprPtr closed = c_to_b_closed(succ_c);
  CHECK(arity_b(closed) == BArity{1, 0});
  for (std::uint64_t k : {0u, 1u, 2u, 3u, 12u, 255u}) {
    CHECK(testutil::decode(eval_b(closed, {testutil::encode(k)}, {})) ==
          k + 1);
  }

  BExprPtr smash_closed = c_to_b_closed(c_smash());
  CHECK(arity_b(smash_closed) == BArity{2, 0});
  CHECK(render_literal(eval_b(smash_closed, {lit("10"), lit("11")}, {})) ==
        "10000");

  // composing back into C preserves the function
  CExprPtr round = b_to_c(closed);
  CHECK(arity_c(round) == 1);
  for (std::uint64_t k : {0u, 5u, 9u}) {
    CHECK(testutil::decode(eval_c_checked(round, {testutil::encode(k)})) ==
          k + 1);
  }
}
