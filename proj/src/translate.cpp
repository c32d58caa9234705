#include "polytime/translate.hpp"

#include <utility>

#include "polytime/errors.hpp"

namespace polytime {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// The C image of cond: recursion on the scrutinee whose first step picks the
// x/y/z case; j is a nested smash comfortably above all three branches.
CExprPtr cond_c() {
  static const CExprPtr e = [] {
    auto s1 = [](CExprPtr x) {
      return c_comp(4, c_succ(Bit::b1), {std::move(x)});
    };
    CExprPtr inner =
        c_comp(4, c_smash(), {s1(c_proj(2, 4)), s1(c_proj(3, 4))});
    CExprPtr j = c_comp(4, c_smash(), {s1(c_proj(1, 4)), inner});
    return c_rec(c_proj(0, 3), c_proj(3, 5), c_proj(4, 5), std::move(j));
  }();
  return e;
}

CExprPtr b_to_c_impl(const BExprPtr& e) {
  return std::visit(
      overloaded{
          [](const BExpr::Zero&) { return c_zero(); },
          [](const BExpr::Proj& p) {
            return c_proj(p.index, p.normal + p.safe);
          },
          [](const BExpr::Succ& s) { return c_succ(s.bit); },
          [](const BExpr::Pred&) { return c_pred(); },
          [](const BExpr::Cond&) { return cond_c(); },
          [](const BExpr::Comp& c) {
            std::vector<CExprPtr> gs;
            gs.reserve(c.gn.size() + c.gs.size());
            for (const auto& g : c.gn)
              gs.push_back(c_dummies(c.safe, b_to_c_impl(g)));
            for (const auto& g : c.gs) gs.push_back(b_to_c_impl(g));
            return c_comp(c.normal + c.safe, b_to_c_impl(c.h), std::move(gs));
          },
          [&](const BExpr::Rec& r) {
            BArity a = arity_b(e);
            BArity ga = arity_b(r.g);
            const std::size_t m = a.normal + a.safe;
            // The safety of the synthesized Rec is the polymax bound: the
            // normal part from pol_b, plus every safe size linearly.
            MPoly bound = inject(pol_b(e), m);
            for (std::size_t i = a.normal; i < m; ++i)
              bound = add(bound, MPoly::variable(m, i));
            return c_rec(b_to_c_impl(r.g),
                         move_arg(b_to_c_impl(r.h0), ga.normal),
                         move_arg(b_to_c_impl(r.h1), ga.normal),
                         poly_to_c(bound));
          },
      },
      e->node);
}

MPoly pol_c_to_b_impl(const CExprPtr& e) {
  return std::visit(
      overloaded{
          [](const CExpr::O&) { return MPoly::constant(0, 0); },
          [](const CExpr::Proj& p) { return MPoly::constant(p.arity, 0); },
          [](const CExpr::Succ&) { return MPoly::constant(1, 0); },
          [](const CExpr::Smash&) {
            MPoly out = MPoly::variable(2, 0);
            out = add(out, mul(MPoly::constant(2, 2), MPoly::variable(2, 1)));
            return add(out, MPoly::constant(2, 18));
          },
          [](const CExpr::Comp& c) {
            std::vector<MPoly> sizes;
            sizes.reserve(c.gs.size());
            for (const auto& g : c.gs) sizes.push_back(pol_c(g));
            MPoly out = compose(pol_c_to_b_impl(c.h), sizes, c.arity);
            for (const auto& g : c.gs) out = add(out, pol_c_to_b_impl(g));
            return out;
          },
          [](const CExpr::Rec& r) {
            MPoly steps = add(pol_c_to_b_impl(r.h0), pol_c_to_b_impl(r.h1));
            const std::size_t m = steps.num_vars() - 1;
            // Step bounds see (prefix, recursive value, rest); the recursive
            // value's size is bounded by Pol_C of the whole Rec, i.e. of j.
            std::vector<MPoly> subs;
            subs.reserve(m + 1);
            subs.push_back(MPoly::variable(m, 0));
            subs.push_back(pol_c(r.j));
            for (std::size_t i = 1; i < m; ++i)
              subs.push_back(MPoly::variable(m, i));
            MPoly out = compose(steps, subs, m);
            out = add(out, shift(pol_c_to_b_impl(r.g)));
            out = add(out, MPoly::variable(m, 0));
            return add(out, MPoly::constant(m, 2));
          },
      },
      e->node);
}

// comp wrapper turning fhat (arity (2, m)) into f' (arity (1, m)) by passing
// the padding argument twice.
BExprPtr fprime_wrap(BExprPtr fhat, std::size_t m) {
  std::vector<BExprPtr> safes;
  safes.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) safes.push_back(b_proj(i, 1, m));
  return b_comp(1, m, std::move(fhat), {b_proj(0, 1, 0), b_proj(0, 1, 0)},
                std::move(safes));
}

BExprPtr padded_impl(const CExprPtr& e) {
  return std::visit(
      overloaded{
          [](const CExpr::O&) { return b_comp(1, 0, b_zero(), {}, {}); },
          [](const CExpr::Proj& p) {
            return b_proj(p.index + 1, 1, p.arity);
          },
          [](const CExpr::Succ& s) {
            return b_comp(1, 1, b_succ(s.bit), {}, {b_proj(1, 1, 1)});
          },
          [](const CExpr::Smash&) { return build_smash_b(); },
          [](const CExpr::Comp& c) {
            std::vector<BExprPtr> gs;
            gs.reserve(c.gs.size());
            for (const auto& g : c.gs) gs.push_back(padded_impl(g));
            return b_comp(1, c.arity, padded_impl(c.h), {b_proj(0, 1, 0)},
                          std::move(gs));
          },
          [&](const CExpr::Rec& r) {
            const std::size_t m = arity_c(e);
            BExprPtr fhat = build_fhat(padded_impl(r.g), padded_impl(r.h0),
                                       padded_impl(r.h1));
            return fprime_wrap(std::move(fhat), m);
          },
      },
      e->node);
}

}  // namespace

CExprPtr c_dummies(std::size_t s, const CExprPtr& e) {
  const std::size_t n = arity_c(e);
  std::vector<CExprPtr> gs;
  gs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gs.push_back(c_proj(i, n + s));
  return c_comp(n + s, e, std::move(gs));
}

CExprPtr move_arg(const CExprPtr& e, std::size_t n_g) {
  const std::size_t m = arity_c(e);
  if (m < n_g + 2)
    throw IllFormed("<root>", "move_arg needs arity >= " +
                                  std::to_string(n_g + 2) + ", got " +
                                  std::to_string(m));
  std::vector<CExprPtr> gs;
  gs.reserve(m);
  gs.push_back(c_proj(0, m));
  for (std::size_t i = 2; i <= n_g + 1; ++i) gs.push_back(c_proj(i, m));
  gs.push_back(c_proj(1, m));
  for (std::size_t i = n_g + 2; i < m; ++i) gs.push_back(c_proj(i, m));
  return c_comp(m, e, std::move(gs));
}

CExprPtr b_to_c(const BExprPtr& e) {
  arity_b(e);
  return b_to_c_impl(e);
}

MPoly pol_c_to_b(const CExprPtr& e) {
  arity_c(e);
  return pol_c_to_b_impl(e);
}

SimulationResult c_to_b_padded(const CExprPtr& e) {
  arity_c(e);
  return SimulationResult{padded_impl(e), pol_c_to_b_impl(e)};
}

BExprPtr build_p() {
  static const BExprPtr e = [] {
    BExprPtr h = b_comp(1, 2, b_pred(), {}, {b_proj(1, 1, 2)});
    return b_rec(b_proj(0, 0, 1), h, h);
  }();
  return e;
}

BExprPtr build_p_prime() {
  static const BExprPtr e =
      b_comp(2, 0, build_p(), {b_proj(0, 2, 0)}, {b_proj(1, 2, 0)});
  return e;
}

BExprPtr build_y() {
  static const BExprPtr e =
      b_comp(2, 1, build_p(), {build_p_prime()}, {b_proj(2, 2, 1)});
  return e;
}

BExprPtr build_fhat(const BExprPtr& gp, const BExprPtr& h0p,
                    const BExprPtr& h1p) {
  const std::size_t m = arity_b(gp).safe + 1;

  // Base: fhat(eps, w; y, xs) = gp(w; xs), skipping the y slot.
  std::vector<BExprPtr> g_safes;
  g_safes.reserve(m - 1);
  for (std::size_t i = 2; i <= m; ++i) g_safes.push_back(b_proj(i, 1, m));
  BExprPtr base = b_comp(1, m, gp, {b_proj(0, 1, 0)}, std::move(g_safes));

  // Step context (2, m+1): normals z, w; safes r (recursive value), y, xs.
  const std::size_t sn = 2, ss = m + 1;
  auto pj = [&](std::size_t i) { return b_proj(i, sn, ss); };
  auto pn = [](std::size_t i) { return b_proj(i, 2, 0); };

  BExprPtr s1z = b_comp(2, 0, b_succ(Bit::b1), {}, {pn(0)});
  // Y(s1 z, w; y): the still-unprocessed suffix of y; its lsb drives cond.
  BExprPtr scrut = b_comp(sn, ss, build_y(), {std::move(s1z), pn(1)}, {pj(3)});

  std::vector<BExprPtr> xs;
  xs.reserve(m - 1);
  for (std::size_t i = 4; i <= m + 2; ++i) xs.push_back(pj(i));

  BExprPtr g_branch = b_comp(sn, ss, gp, {pn(1)}, xs);

  // Y(z, w; y): the simulated recursion prefix handed to the step functions.
  BExprPtr y_prefix = b_comp(sn, ss, build_y(), {pn(0), pn(1)}, {pj(3)});
  auto step_branch = [&](const BExprPtr& hp) {
    std::vector<BExprPtr> safes;
    safes.reserve(m + 1);
    safes.push_back(y_prefix);
    safes.push_back(pj(2));
    safes.insert(safes.end(), xs.begin(), xs.end());
    return b_comp(sn, ss, hp, {pn(1)}, std::move(safes));
  };

  BExprPtr step = b_comp(
      sn, ss, b_cond(), {},
      {std::move(scrut), std::move(g_branch), step_branch(h0p),
       step_branch(h1p)});
  return b_rec(std::move(base), step, step);
}

BExprPtr build_smash_b() {
  static const BExprPtr e = [] {
    // #'(x, y) = y followed by |x| zeros, recursing on x.
    BExprPtr sp_h = b_comp(1, 3, b_succ(Bit::b0), {}, {b_proj(2, 1, 3)});
    BExprPtr smash_prime =
        fprime_wrap(build_fhat(b_proj(1, 1, 1), sp_h, sp_h), 2);
    // #(xi, y) = #'(y, #(x, y)); swap so the recursive value lands second.
    BExprPtr inner = b_comp(1, 2, std::move(smash_prime), {b_proj(0, 1, 0)},
                            {b_proj(2, 1, 2), b_proj(1, 1, 2)});
    BExprPtr h = b_dummies(0, 1, std::move(inner));
    return fprime_wrap(build_fhat(b_one(), h, h), 2);
  }();
  return e;
}

BExprPtr b_dummies(std::size_t dn, std::size_t ds, const BExprPtr& e) {
  BArity a = arity_b(e);
  std::vector<BExprPtr> gn, gs;
  gn.reserve(a.normal);
  gs.reserve(a.safe);
  for (std::size_t i = 0; i < a.normal; ++i)
    gn.push_back(b_proj(i, a.normal + dn, 0));
  for (std::size_t i = 0; i < a.safe; ++i)
    gs.push_back(b_proj(a.normal + dn + ds + i, a.normal + dn, a.safe + ds));
  return b_comp(a.normal + dn, a.safe + ds, e, std::move(gn), std::move(gs));
}

BExprPtr c_to_b_closed(const CExprPtr& e) {
  const std::size_t n = arity_c(e);
  SimulationResult sim = c_to_b_padded(e);
  std::vector<BExprPtr> gs;
  gs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gs.push_back(b_proj(i, n, 0));
  return b_comp(n, 0, sim.expr, {poly_to_b(sim.bound)}, std::move(gs));
}

}  // namespace polytime
