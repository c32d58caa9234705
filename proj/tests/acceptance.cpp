// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any criterion fails.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polytime/bellantoni.hpp"
#include "polytime/cobham.hpp"
#include "polytime/errors.hpp"
#include "polytime/mpoly.hpp"
#include "polytime/stdlib.hpp"
#include "polytime/translate.hpp"
#include "support/testutil.hpp"

using namespace polytime;
using testutil::Rng;

namespace {

int failures = 0;

void report(int number, const std::string& label,
            const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  bool ok = detail.empty();
  if (!ok) ++failures;
  std::cout << "criterion " << number << " (" << label << "): "
            << (ok ? "PASS" : "FAIL") << (ok ? "" : " -- " + detail)
            << std::endl;
}

std::string expect_eq(const std::string& what, const std::string& got,
                      const std::string& want) {
  if (got == want) return "";
  return what + ": got \"" + got + "\", want \"" + want + "\"";
}

std::string exact_polynomials() {
  std::string r = expect_eq("pol_c(smash)", print_canonical(pol_c(c_smash())),
                            "x0*x1 + 1");
  if (!r.empty()) return r;
  return expect_eq("pol_c_to_b(smash)",
                   print_canonical(pol_c_to_b(c_smash())), "x0 + 2*x1 + 18");
}

std::string exact_arities() {
  if (arity_b(b_plus()) != BArity{1, 1}) return "arity_b(plus) != (1, 1)";
  if (arity_b(b_mult()) != BArity{2, 0}) return "arity_b(mult) != (2, 0)";
  if (arity_c(c_succ(Bit::b1)) != 1) return "arity_c(succ) != 1";
  if (arity_b(b_cond()) != BArity{0, 4}) return "arity_b(cond) != (0, 4)";
  return "";
}

std::string c_length_bound() {
  Rng rng(1001);
  for (int i = 0; i < 500; ++i) {
    std::size_t arity = testutil::pick(rng, 0, 3);
    CExprPtr e = testutil::random_c_expr(rng, arity, 5);
    MPoly bound = pol_c(e);
    for (int k = 0; k < 20; ++k) {
      ArgVector args = testutil::random_args(rng, arity, 12);
      Bitstring v = eval_c_checked(e, args);
      if (Nat(v.length()) >
          eval(bound, testutil::to_nat_sizes(size_vector(args))))
        return "bound violated at expression " + std::to_string(i);
    }
  }
  return "";
}

std::string b_polymax_bound() {
  Rng rng(1002);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = testutil::pick(rng, 0, 2);
    std::size_t s = testutil::pick(rng, 0, 2);
    BExprPtr e = testutil::random_b_expr(rng, n, s, 5);
    MPoly bound = pol_b(e);
    for (int k = 0; k < 20; ++k) {
      ArgVector normals = testutil::random_args(rng, n, 12);
      ArgVector safes = testutil::random_args(rng, s, 12);
      Bitstring v = eval_b(e, normals, safes);
      std::size_t safe_max = 0;
      for (const auto& y : safes)
        safe_max = std::max(safe_max, y.length());
      if (Nat(v.length()) >
          eval(bound, testutil::to_nat_sizes(size_vector(normals))) +
              safe_max)
        return "polymax bound violated at expression " + std::to_string(i);
    }
  }
  return "";
}

std::string b_to_c_differential() {
  Rng rng(1003);
  for (const Def& d : all_defs()) {
    if (d.cls != FnClass::B) continue;
    CExprPtr c = b_to_c(d.b_expr);
    for (int k = 0; k < 1000; ++k) {
      ArgVector normals = testutil::random_args(rng, d.b_arity.normal, 12);
      ArgVector safes = testutil::random_args(rng, d.b_arity.safe, 12);
      ArgVector joined = normals;
      joined.insert(joined.end(), safes.begin(), safes.end());
      if (eval_c_checked(c, joined) != eval_b(d.b_expr, normals, safes))
        return d.name + " disagrees at trial " + std::to_string(k);
    }
  }
  return "";
}

std::string c_to_b_simulation() {
  Rng rng(1004);
  std::vector<std::pair<std::string, CExprPtr>> subjects = {
      {"succ_c", lookup("succ_c").c_expr},
      {"pred_c", lookup("pred_c").c_expr},
      {"smash", c_smash()},
  };
  {
    MPoly p1 = add(MPoly::variable(1, 0), MPoly::constant(1, 1));
    MPoly p2 = add(add(MPoly::variable(2, 0), MPoly::variable(2, 0)),
                   MPoly::variable(2, 1));
    MPoly p3 = add(mul(MPoly::variable(2, 0), MPoly::variable(2, 1)),
                   MPoly::constant(2, 1));
    subjects.push_back({"poly x0+1", poly_to_c(p1)});
    subjects.push_back({"poly 2*x0+x1", poly_to_c(p2)});
    subjects.push_back({"poly x0*x1+1", poly_to_c(p3)});
  }
  for (const auto& [name, e] : subjects) {
    std::size_t arity = arity_c(e);
    BExprPtr closed = c_to_b_closed(e);
    SimulationResult sim = c_to_b_padded(e);
    auto probe = [&](const ArgVector& args) -> std::string {
      Bitstring expected = eval_c(e, args);
      if (eval_b(closed, args, {}) != expected)
        return name + ": closed form disagrees";
      Nat need = eval(sim.bound, testutil::to_nat_sizes(size_vector(args)));
      for (std::size_t extra : {0u, 1u, 5u}) {
        Bitstring w(std::vector<Bit>(
            static_cast<std::size_t>(need) + extra, Bit::b0));
        if (eval_b(sim.expr, {w}, args) != expected)
          return name + ": padded form disagrees at threshold +" +
                 std::to_string(extra);
      }
      return "";
    };
    // exhaustive over component lengths <= 4
    std::vector<Bitstring> domain{Bitstring()};
    for (std::size_t start = 0, len = 1; len <= 4; ++len) {
      std::size_t stop = domain.size();
      for (std::size_t i = start; i < stop; ++i)
        for (Bit b : {Bit::b0, Bit::b1})
          domain.push_back(append_lsb(domain[i], b));
      start = stop;
    }
    if (arity == 1) {
      for (const Bitstring& x : domain)
        if (std::string r = probe({x}); !r.empty()) return r;
    } else {
      for (const Bitstring& x : domain)
        for (const Bitstring& y : domain)
          if (std::string r = probe({x, y}); !r.empty()) return r;
    }
    for (int k = 0; k < 500; ++k)
      if (std::string r = probe(testutil::random_args(rng, arity, 8));
          !r.empty())
        return r + " (random trial " + std::to_string(k) + ")";
  }
  return "";
}

std::string unary_encoding() {
  Rng rng(1005);
  for (int i = 0; i < 100; ++i) {
    MPoly p = testutil::random_poly(rng, 3, 3, 5);
    CExprPtr pc = poly_to_c(p);
    BExprPtr pb = poly_to_b(p);
    for (int k = 0; k < 20; ++k) {
      ArgVector args = testutil::random_args(rng, p.num_vars(), 8);
      Nat want = eval(p, testutil::to_nat_sizes(size_vector(args)));
      if (Nat(eval_c_checked(pc, args).length()) != want)
        return "poly_to_c inexact at polynomial " + std::to_string(i);
      if (Nat(eval_b(pb, args, {}).length()) != want)
        return "poly_to_b inexact at polynomial " + std::to_string(i);
    }
  }
  return "";
}

std::string time_bound() {
  Rng rng(1006);
  auto check = [&](const BExprPtr& e, const std::string& name,
                   int trials) -> std::string {
    BArity a = arity_b(e);
    MPoly tb = pol_time(e);
    for (int k = 0; k < trials; ++k) {
      ArgVector normals = testutil::random_args(rng, a.normal, 12);
      ArgVector safes = testutil::random_args(rng, a.safe, 12);
      TimedResult r = eval_b_timed(e, normals, safes);
      if (Nat(r.cost) >
          eval(tb, testutil::to_nat_sizes(size_vector(normals))))
        return name + ": cost bound violated";
    }
    return "";
  };
  for (const Def& d : all_defs()) {
    if (d.cls != FnClass::B) continue;
    if (std::string r = check(d.b_expr, d.name, 20); !r.empty()) return r;
  }
  for (int i = 0; i < 500; ++i) {
    std::size_t n = testutil::pick(rng, 0, 2);
    std::size_t s = testutil::pick(rng, 0, 2);
    BExprPtr e = testutil::random_b_expr(rng, n, s, 5);
    if (std::string r = check(e, "random " + std::to_string(i), 20);
        !r.empty())
      return r;
  }
  return "";
}

std::string inference() {
  Rng rng(1007);
  for (const Def& d : all_defs()) {
    if (d.cls != FnClass::B) continue;
    BExprPtr minimal = infer(erase(d.b_expr), std::nullopt);
    BArity ma = arity_b(minimal);
    if (ma.normal > d.b_arity.normal || ma.safe > d.b_arity.safe)
      return d.name + ": inferred arity exceeds the declared one";
    if (!structurally_equal(erase(minimal), erase(d.b_expr)))
      return d.name + ": inference changed the tree shape";
    BExprPtr floored = infer(erase(d.b_expr), d.b_arity);
    if (arity_b(floored) != d.b_arity)
      return d.name + ": floored inference missed the declared arity";
    for (int k = 0; k < 25; ++k) {
      ArgVector normals = testutil::random_args(rng, d.b_arity.normal, 8);
      ArgVector safes = testutil::random_args(rng, d.b_arity.safe, 8);
      if (eval_b(floored, normals, safes) !=
          eval_b(d.b_expr, normals, safes))
        return d.name + ": floored inference changed the function";
    }
  }
  if (arity_b(infer(erase(b_plus()), std::nullopt)) != BArity{1, 1})
    return "plus does not infer (1, 1)";
  if (arity_b(infer(erase(b_mult()), std::nullopt)) != BArity{2, 0})
    return "mult does not infer (2, 0)";
  return "";
}

std::string binary_successor() {
  CExprPtr succ = lookup("succ_c").c_expr;
  for (std::uint64_t k = 0; k <= 255; ++k) {
    if (testutil::decode(eval_c_checked(succ, {testutil::encode(k)})) !=
        k + 1)
      return "succ_c wrong at k = " + std::to_string(k);
  }
  CExprPtr round = b_to_c(c_to_b_closed(succ));
  for (std::uint64_t k = 0; k <= 255; ++k) {
    if (testutil::decode(eval_c_checked(round, {testutil::encode(k)})) !=
        k + 1)
      return "translated successor wrong at k = " + std::to_string(k);
  }
  return "";
}

}  // namespace

int main() {
  report(1, "exact polynomials", exact_polynomials);
  report(2, "exact arities", exact_arities);
  report(3, "C length bound", c_length_bound);
  report(4, "B polymax bound", b_polymax_bound);
  report(5, "B-to-C differential", b_to_c_differential);
  report(6, "C-to-B simulation", c_to_b_simulation);
  report(7, "unary encoding exactness", unary_encoding);
  report(8, "time bound", time_bound);
  report(9, "arity inference", inference);
  report(10, "binary successor end-to-end", binary_successor);
  return failures == 0 ? 0 : 1;
}
