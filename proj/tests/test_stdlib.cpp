#include <doctest.h>

#include <algorithm>

#include "polytime/errors.hpp"
#include "polytime/stdlib.hpp"
#include "polytime/translate.hpp"
#include "support/testutil.hpp"

using namespace polytime;
using testutil::Rng;

namespace {

Bitstring lit(const char* s) { return parse_literal(s); }

Bitstring apply(const Def& d, const ArgVector& normals,
                const ArgVector& safes) {
  if (d.cls == FnClass::C) {
    ArgVector joined = normals;
    joined.insert(joined.end(), safes.begin(), safes.end());
    return eval_c_checked(d.c_expr, joined);
  }
  return eval_b(d.b_expr, normals, safes);
}

// Enumerates all bitstrings of length <= max_len in a deterministic order.
std::vector<Bitstring> all_strings(std::size_t max_len) {
  std::vector<Bitstring> out{Bitstring()};
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t stop = out.size();
    for (std::size_t i = start; i < stop; ++i)
      for (Bit b : {Bit::b0, Bit::b1})
        out.push_back(append_lsb(out[i], b));
    start = stop;
  }
  return out;
}

}  // namespace

TEST_CASE("registry lookup") {
  const auto& defs = all_defs();
  CHECK(defs.size() == 10);
  CHECK(defs.front().name == "succ_c");
  for (const Def& d : defs) {
    CHECK(&lookup(d.name) == &d);
    CHECK(!d.doc.empty());
    if (d.cls == FnClass::C) {
      REQUIRE(d.c_expr);
      CHECK(arity_c(d.c_expr) == d.c_arity);
    } else {
      REQUIRE(d.b_expr);
      CHECK(arity_b(d.b_expr) == d.b_arity);
    }
  }
  CHECK_THROWS_AS(lookup("no_such_fn"), LookupError);
}

TEST_CASE("binary successor") {
  const Def& succ = lookup("succ_c");
  for (std::uint64_t k = 0; k < 300; ++k) {
    Bitstring v = eval_c_checked(succ.c_expr, {testutil::encode(k)});
    CHECK(testutil::decode(v) == k + 1);
  }
  // notation-level examples: trailing ones flip, a zero (or fresh msb) appears
  CHECK(render_literal(eval_c(succ.c_expr, {lit("11")})) == "100");
  CHECK(render_literal(eval_c(succ.c_expr, {lit("eps")})) == "1");
  CHECK(render_literal(eval_c(succ.c_expr, {lit("0011")})) == "0100");
}

TEST_CASE("pred_c inverts succ_c on canonical encodings") {
  const Def& pred = lookup("pred_c");
  CHECK(structurally_equal(pred.c_expr, b_to_c(b_pred())));
  for (std::uint64_t k = 1; k < 40; ++k) {
    Bitstring v = eval_c_checked(pred.c_expr, {testutil::encode(k)});
    CHECK(testutil::decode(v) == k / 2);
  }
}

TEST_CASE("bitwise combinators") {
  const Def& x = lookup("xor");
  CHECK(render_literal(apply(x, {lit("1100")}, {lit("1010")})) == "0110");
  CHECK(render_literal(apply(x, {lit("11")}, {lit("eps")})) == "11");
  const Def& a = lookup("bit_and");
  CHECK(render_literal(apply(a, {lit("1100")}, {lit("1010")})) == "1000");
  const Def& o = lookup("bit_or");
  CHECK(render_literal(apply(o, {lit("1100")}, {lit("1010")})) == "1110");
  const Def& n = lookup("bit_not");
  CHECK(render_literal(apply(n, {lit("1100")}, {})) == "0011");
  CHECK(render_literal(apply(n, {lit("eps")}, {})) == "eps");
}

TEST_CASE("equality test") {
  const Def& eq = lookup("eq_test");
  CHECK(render_literal(apply(eq, {lit("1010"), lit("1010")}, {})) == "1");
  CHECK(render_literal(apply(eq, {lit("1010"), lit("1011")}, {})) == "eps");
  CHECK(render_literal(apply(eq, {lit("0"), lit("00")}, {})) == "eps");
  CHECK(render_literal(apply(eq, {lit("eps"), lit("eps")}, {})) == "1");
}

TEST_CASE("exhaustive oracle agreement on short inputs") {
  std::vector<Bitstring> domain = all_strings(3);
  for (const Def& d : all_defs()) {
    std::size_t n = d.cls == FnClass::C ? d.c_arity : d.b_arity.normal;
    std::size_t s = d.cls == FnClass::C ? 0 : d.b_arity.safe;
    REQUIRE(n + s <= 2);
    if (n + s == 1) {
      for (const Bitstring& x : domain) {
        ArgVector normals, safes;
        (n == 1 ? normals : safes).push_back(x);
        CHECK(apply(d, normals, safes) == d.oracle(normals, safes));
      }
    } else {
      for (const Bitstring& x : domain)
        for (const Bitstring& y : domain) {
          ArgVector normals, safes;
          normals.push_back(x);
          if (n == 2)
            normals.push_back(y);
          else
            safes.push_back(y);
          CHECK(apply(d, normals, safes) == d.oracle(normals, safes));
        }
    }
  }
}

TEST_CASE("random oracle agreement on longer inputs") {
  Rng rng(808);
  for (const Def& d : all_defs()) {
    std::size_t n = d.cls == FnClass::C ? d.c_arity : d.b_arity.normal;
    std::size_t s = d.cls == FnClass::C ? 0 : d.b_arity.safe;
    for (int k = 0; k < 60; ++k) {
      ArgVector normals = testutil::random_args(rng, n, 12);
      ArgVector safes = testutil::random_args(rng, s, 12);
      CHECK(apply(d, normals, safes) == d.oracle(normals, safes));
    }
  }
}

TEST_CASE("declared bounds hold for the registry") {
  Rng rng(909);
  for (const Def& d : all_defs()) {
    if (d.cls != FnClass::B) continue;
    MPoly lb = pol_b(d.b_expr);
    MPoly tb = pol_time(d.b_expr);
    for (int k = 0; k < 20; ++k) {
      ArgVector normals = testutil::random_args(rng, d.b_arity.normal, 10);
      ArgVector safes = testutil::random_args(rng, d.b_arity.safe, 10);
      TimedResult r = eval_b_timed(d.b_expr, normals, safes);
      std::size_t safe_max = 0;
      for (const auto& y : safes) safe_max = std::max(safe_max, y.length());
      std::vector<Nat> sizes = testutil::to_nat_sizes(size_vector(normals));
      CHECK(Nat(r.value.length()) <= eval(lb, sizes) + safe_max);
      CHECK(Nat(r.cost) <= eval(tb, sizes));
    }
  }
}
