#include "polytime/stdlib.hpp"

#include <algorithm>

#include "polytime/errors.hpp"
#include "polytime/translate.hpp"

namespace polytime {

namespace {

CExprPtr make_succ_c() {
  // succ(eps) = 1; succ(y0) = y1; succ(y1) = succ(y)0. Width is preserved
  // except on an all-ones input.
  CExprPtr g = c_comp(0, c_succ(Bit::b1), {c_zero()});
  CExprPtr h0 = c_comp(2, c_succ(Bit::b1), {c_proj(0, 2)});
  CExprPtr h1 = c_comp(2, c_succ(Bit::b0), {c_proj(1, 2)});
  CExprPtr j = c_comp(1, c_succ(Bit::b1), {c_proj(0, 1)});
  return c_rec(std::move(g), std::move(h0), std::move(h1), std::move(j));
}

// Bitwise combinator core: recursion on a copy of x, reading the matching
// bit of y through Y. Each step appends one output bit, so the result has
// length |x|; missing bits of y read as 0 (the eps branch).
//
// Branch table rows are (y-bit missing, y-bit 0, y-bit 1), one row per x-bit.
BExprPtr bitwise(Bit eps0, Bit even0, Bit odd0, Bit eps1, Bit even1,
                 Bit odd1) {
  auto pj = [](std::size_t i) { return b_proj(i, 2, 2); };
  auto pn = [](std::size_t i) { return b_proj(i, 2, 0); };
  BExprPtr s1z = b_comp(2, 0, b_succ(Bit::b1), {}, {pn(0)});
  BExprPtr scrut = b_comp(2, 2, build_y(), {std::move(s1z), pn(1)}, {pj(3)});
  auto append = [&](Bit b) {
    return b_comp(2, 2, b_succ(b), {}, {pj(2)});
  };
  auto step = [&](Bit eps, Bit even, Bit odd) {
    return b_comp(2, 2, b_cond(), {},
                  {scrut, append(eps), append(even), append(odd)});
  };
  BExprPtr g = b_comp(1, 1, b_zero(), {}, {});
  BExprPtr hat = b_rec(std::move(g), step(eps0, even0, odd0),
                       step(eps1, even1, odd1));
  return b_comp(1, 1, std::move(hat), {b_proj(0, 1, 0), b_proj(0, 1, 0)},
                {b_proj(1, 1, 1)});
}

BExprPtr make_xor() {
  return bitwise(Bit::b0, Bit::b0, Bit::b1, Bit::b1, Bit::b1, Bit::b0);
}

BExprPtr make_and() {
  return bitwise(Bit::b0, Bit::b0, Bit::b0, Bit::b0, Bit::b0, Bit::b1);
}

BExprPtr make_or() {
  return bitwise(Bit::b0, Bit::b0, Bit::b1, Bit::b1, Bit::b1, Bit::b1);
}

BExprPtr make_not() {
  BExprPtr h0 = b_comp(1, 1, b_succ(Bit::b1), {}, {b_proj(1, 1, 1)});
  BExprPtr h1 = b_comp(1, 1, b_succ(Bit::b0), {}, {b_proj(1, 1, 1)});
  return b_rec(b_zero(), std::move(h0), std::move(h1));
}

// Booleans are eps (false) and "1" (true) throughout.
BExprPtr make_eq() {
  BExprPtr zero01 = b_comp(0, 1, b_zero(), {}, {});
  BExprPtr one01 = b_comp(0, 1, b_succ(Bit::b1), {}, {zero01});
  // is_eps(;v): "1" iff v = eps.
  BExprPtr is_eps =
      b_comp(0, 1, b_cond(), {}, {b_proj(0, 0, 1), one01, zero01, zero01});

  // "1" iff |y| <= |x| (P' strips |x| bits off y).
  BExprPtr leq = b_comp(2, 0, is_eps, {}, {build_p_prime()});
  BExprPtr leq_rev =
      b_comp(2, 0, leq, {b_proj(1, 2, 0), b_proj(0, 2, 0)}, {});

  // "1" iff some bit is set.
  BExprPtr has_one = b_rec(b_zero(), b_proj(1, 1, 1), b_one());
  BExprPtr xor20 = b_comp(2, 0, make_xor(), {b_proj(0, 2, 0)},
                          {b_proj(1, 2, 0)});
  BExprPtr same_bits =
      b_comp(2, 0, is_eps, {}, {b_comp(2, 0, has_one, {xor20}, {})});

  BExprPtr zero20 = b_comp(2, 0, b_zero(), {}, {});
  auto both = [&](BExprPtr a, BExprPtr b) {
    return b_comp(2, 0, b_cond(), {},
                  {std::move(a), zero20, zero20, std::move(b)});
  };
  return both(both(std::move(leq), std::move(leq_rev)),
              std::move(same_bits));
}

Bitstring oracle_succ(const Bitstring& x) {
  std::vector<Bit> bits = x.msb_first();
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it == Bit::b0) {
      *it = Bit::b1;
      return Bitstring(std::move(bits));
    }
    *it = Bit::b0;
  }
  bits.insert(bits.begin(), Bit::b1);
  return Bitstring(std::move(bits));
}

Bitstring oracle_ones(std::size_t count, const Bitstring& prefix) {
  std::vector<Bit> bits = prefix.msb_first();
  bits.insert(bits.end(), count, Bit::b1);
  return Bitstring(std::move(bits));
}

Bit y_bit(const Bitstring& y, std::size_t i) {
  return i < y.length() ? y.bit(i) : Bit::b0;
}

template <class F>
Bitstring oracle_bitwise(const Bitstring& x, const Bitstring& y, F f) {
  std::vector<Bit> bits(x.length(), Bit::b0);
  for (std::size_t i = 0; i < x.length(); ++i)
    bits[x.length() - 1 - i] = f(x.bit(i), y_bit(y, i));
  return Bitstring(std::move(bits));
}

std::vector<Def> build_defs() {
  std::vector<Def> defs;
  auto add_c = [&](std::string name, CExprPtr e, std::size_t arity,
                   std::function<Bitstring(const ArgVector&)> f,
                   std::string doc) {
    Def d;
    d.name = std::move(name);
    d.cls = FnClass::C;
    d.c_expr = std::move(e);
    d.c_arity = arity;
    d.oracle = [f = std::move(f)](const ArgVector& xs, const ArgVector&) {
      return f(xs);
    };
    d.doc = std::move(doc);
    defs.push_back(std::move(d));
  };
  auto add_b = [&](std::string name, BExprPtr e, BArity arity,
                   std::function<Bitstring(const ArgVector&,
                                           const ArgVector&)> f,
                   std::string doc) {
    Def d;
    d.name = std::move(name);
    d.cls = FnClass::B;
    d.b_expr = std::move(e);
    d.b_arity = arity;
    d.oracle = std::move(f);
    d.doc = std::move(doc);
    defs.push_back(std::move(d));
  };

  add_c("succ_c", make_succ_c(), 1,
        [](const ArgVector& xs) { return oracle_succ(xs[0]); },
        "binary successor on notations (width-preserving except on all ones)");
  add_c("pred_c", b_to_c(b_pred()), 1,
        [](const ArgVector& xs) {
          auto split = split_lsb(xs[0]);
          return split ? split->first : Bitstring();
        },
        "drop the least significant bit");
  add_b("plus", b_plus(), {1, 1},
        [](const ArgVector& xs, const ArgVector& ys) {
          return oracle_ones(xs[0].length(), ys[0]);
        },
        "length addition: |plus(x;y)| = |x| + |y| (not binary addition)");
  add_b("mult", b_mult(), {2, 0},
        [](const ArgVector& xs, const ArgVector&) {
          return oracle_ones(xs[0].length() * xs[1].length(), Bitstring());
        },
        "length multiplication: |mult(x,y;)| = |x| * |y| (not binary)");
  add_b("one", b_one(), {1, 1},
        [](const ArgVector&, const ArgVector&) {
          return parse_literal("1");
        },
        "constant 1, ignoring one normal and one safe argument");
  add_b("xor", make_xor(), {1, 1},
        [](const ArgVector& xs, const ArgVector& ys) {
          return oracle_bitwise(xs[0], ys[0], [](Bit a, Bit b) {
            return bit_of(bit_value(a) ^ bit_value(b));
          });
        },
        "bitwise xor; output length |x|, missing bits of y read as 0");
  add_b("bit_and", make_and(), {1, 1},
        [](const ArgVector& xs, const ArgVector& ys) {
          return oracle_bitwise(xs[0], ys[0], [](Bit a, Bit b) {
            return bit_of(bit_value(a) & bit_value(b));
          });
        },
        "bitwise and; output length |x|, missing bits of y read as 0");
  add_b("bit_or", make_or(), {1, 1},
        [](const ArgVector& xs, const ArgVector& ys) {
          return oracle_bitwise(xs[0], ys[0], [](Bit a, Bit b) {
            return bit_of(bit_value(a) | bit_value(b));
          });
        },
        "bitwise or; output length |x|, missing bits of y read as 0");
  add_b("bit_not", make_not(), {1, 0},
        [](const ArgVector& xs, const ArgVector&) {
          return oracle_bitwise(xs[0], Bitstring(),
                                [](Bit a, Bit) { return bit_flip(a); });
        },
        "bitwise complement of x");
  add_b("eq_test", make_eq(), {2, 0},
        [](const ArgVector& xs, const ArgVector&) {
          return xs[0] == xs[1] ? parse_literal("1") : Bitstring();
        },
        "equality test: \"1\" if x = y, eps otherwise");
  return defs;
}

}  // namespace

const std::vector<Def>& all_defs() {
  static const std::vector<Def> defs = build_defs();
  return defs;
}

const Def& lookup(const std::string& name) {
  const auto& defs = all_defs();
  auto it = std::find_if(defs.begin(), defs.end(),
                         [&](const Def& d) { return d.name == name; });
  if (it == defs.end()) throw LookupError("unknown definition: " + name);
  return *it;
}

}  // namespace polytime
