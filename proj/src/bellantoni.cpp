#include "polytime/bellantoni.hpp"

#include <algorithm>
#include <string>
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

constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

struct PathFrame {
  const char* tag;
  std::size_t index;
};

std::string join_path(const std::vector<PathFrame>& frames) {
  std::string out;
  for (const auto& f : frames) {
    if (!out.empty()) out += ".";
    out += f.tag;
    if (f.index != kNoIndex) out += "[" + std::to_string(f.index) + "]";
  }
  return out.empty() ? "<root>" : out;
}

std::string show(BArity a) {
  return "(" + std::to_string(a.normal) + ", " + std::to_string(a.safe) + ")";
}

BArity arity_impl(const BExpr& e, std::vector<PathFrame>& path) {
  return std::visit(
      overloaded{
          [](const BExpr::Zero&) { return BArity{0, 0}; },
          [&](const BExpr::Proj& p) {
            if (p.index >= p.normal + p.safe)
              throw IllFormed(join_path(path),
                              "projection requires i < n + s, got i = " +
                                  std::to_string(p.index) + " with " +
                                  show({p.normal, p.safe}));
            return BArity{p.normal, p.safe};
          },
          [](const BExpr::Succ&) { return BArity{0, 1}; },
          [](const BExpr::Pred&) { return BArity{0, 1}; },
          [](const BExpr::Cond&) { return BArity{0, 4}; },
          [&](const BExpr::Comp& c) {
            path.push_back({"comp.h", kNoIndex});
            BArity ah = arity_impl(*c.h, path);
            path.pop_back();
            if (ah.normal != c.gn.size() || ah.safe != c.gs.size())
              throw IllFormed(join_path(path),
                              "composition requires A(h) = (|gN|, |gS|): "
                              "A(h) = " + show(ah) + " but (" +
                                  std::to_string(c.gn.size()) + ", " +
                                  std::to_string(c.gs.size()) +
                                  ") arguments given");
            for (std::size_t i = 0; i < c.gn.size(); ++i) {
              path.push_back({"comp.gn", i});
              BArity ag = arity_impl(*c.gn[i], path);
              if (ag != BArity{c.normal, 0})
                throw IllFormed(join_path(path),
                                "normal argument has arity " + show(ag) +
                                    ", expected " + show({c.normal, 0}));
              path.pop_back();
            }
            for (std::size_t i = 0; i < c.gs.size(); ++i) {
              path.push_back({"comp.gs", i});
              BArity ag = arity_impl(*c.gs[i], path);
              if (ag != BArity{c.normal, c.safe})
                throw IllFormed(join_path(path),
                                "safe argument has arity " + show(ag) +
                                    ", expected " + show({c.normal, c.safe}));
              path.pop_back();
            }
            return BArity{c.normal, c.safe};
          },
          [&](const BExpr::Rec& r) {
            path.push_back({"rec.g", kNoIndex});
            BArity ag = arity_impl(*r.g, path);
            path.pop_back();
            path.push_back({"rec.h0", kNoIndex});
            BArity ah0 = arity_impl(*r.h0, path);
            path.pop_back();
            path.push_back({"rec.h1", kNoIndex});
            BArity ah1 = arity_impl(*r.h1, path);
            path.pop_back();
            BArity want{ag.normal + 1, ag.safe + 1};
            if (ah0 != want || ah1 != want)
              throw IllFormed(join_path(path),
                              "recursion requires A(h0) = A(h1) = (n_g+1, "
                              "s_g+1) = " + show(want) + "; got A(h0) = " +
                                  show(ah0) + ", A(h1) = " + show(ah1));
            return BArity{ag.normal + 1, ag.safe};
          },
      },
      e.node);
}

TimedResult eval_node(const BExpr& e, const ArgVector& normals,
                      const ArgVector& safes) {
  return std::visit(
      overloaded{
          [&](const BExpr::Zero&) { return TimedResult{Bitstring(), 1}; },
          [&](const BExpr::Proj& p) {
            const Bitstring& v = p.index < p.normal
                                     ? normals[p.index]
                                     : safes[p.index - p.normal];
            return TimedResult{v, 1};
          },
          [&](const BExpr::Succ& s) {
            return TimedResult{append_lsb(safes[0], s.bit), 1};
          },
          [&](const BExpr::Pred&) {
            auto split = split_lsb(safes[0]);
            return TimedResult{split ? split->first : Bitstring(), 1};
          },
          [&](const BExpr::Cond&) {
            const Bitstring& w = safes[0];
            if (w.empty()) return TimedResult{safes[1], 1};
            return TimedResult{w.bit(0) == Bit::b0 ? safes[2] : safes[3], 1};
          },
          [&](const BExpr::Comp& c) {
            static const ArgVector no_safes;
            ArgVector hn, hs;
            hn.reserve(c.gn.size());
            hs.reserve(c.gs.size());
            std::uint64_t cost = 0;
            for (const auto& g : c.gn) {
              TimedResult r = eval_node(*g, normals, no_safes);
              cost += r.cost;
              hn.push_back(std::move(r.value));
            }
            for (const auto& g : c.gs) {
              TimedResult r = eval_node(*g, normals, safes);
              cost += r.cost;
              hs.push_back(std::move(r.value));
            }
            TimedResult r = eval_node(*c.h, hn, hs);
            r.cost += cost;
            return r;
          },
          [&](const BExpr::Rec& r) {
            const Bitstring& z = normals.front();
            const ArgVector rest(normals.begin() + 1, normals.end());
            TimedResult acc = eval_node(*r.g, rest, safes);
            for (std::size_t k = z.length(); k-- > 0;) {
              ArgVector hn;
              hn.reserve(rest.size() + 1);
              hn.push_back(drop_lsb(z, k + 1));
              hn.insert(hn.end(), rest.begin(), rest.end());
              ArgVector hs;
              hs.reserve(safes.size() + 1);
              hs.push_back(std::move(acc.value));
              hs.insert(hs.end(), safes.begin(), safes.end());
              const BExpr& h = z.bit(k) == Bit::b1 ? *r.h1 : *r.h0;
              TimedResult step = eval_node(h, hn, hs);
              acc.value = std::move(step.value);
              acc.cost += step.cost;
            }
            return acc;
          },
      },
      e.node);
}

// Value-only evaluator. Same results as eval_node, but a conditional only
// evaluates its scrutinee and the branch it selects; the cost model requires
// eval_node to stay strict, while values cannot depend on skipped branches.
Bitstring eval_value(const BExpr& e, const ArgVector& normals,
                     const ArgVector& safes) {
  return std::visit(
      overloaded{
          [&](const BExpr::Zero&) { return Bitstring(); },
          [&](const BExpr::Proj& p) {
            return p.index < p.normal ? normals[p.index]
                                      : safes[p.index - p.normal];
          },
          [&](const BExpr::Succ& s) { return append_lsb(safes[0], s.bit); },
          [&](const BExpr::Pred&) {
            auto split = split_lsb(safes[0]);
            return split ? split->first : Bitstring();
          },
          [&](const BExpr::Cond&) {
            const Bitstring& w = safes[0];
            if (w.empty()) return safes[1];
            return w.bit(0) == Bit::b0 ? safes[2] : safes[3];
          },
          [&](const BExpr::Comp& c) {
            if (std::holds_alternative<BExpr::Cond>(c.h->node)) {
              Bitstring w = eval_value(*c.gs[0], normals, safes);
              std::size_t pick =
                  w.empty() ? 1 : (w.bit(0) == Bit::b0 ? 2 : 3);
              return eval_value(*c.gs[pick], normals, safes);
            }
            static const ArgVector no_safes;
            ArgVector hn, hs;
            hn.reserve(c.gn.size());
            hs.reserve(c.gs.size());
            for (const auto& g : c.gn)
              hn.push_back(eval_value(*g, normals, no_safes));
            for (const auto& g : c.gs)
              hs.push_back(eval_value(*g, normals, safes));
            return eval_value(*c.h, hn, hs);
          },
          [&](const BExpr::Rec& r) {
            const Bitstring& z = normals.front();
            const ArgVector rest(normals.begin() + 1, normals.end());
            Bitstring acc = eval_value(*r.g, rest, safes);
            for (std::size_t k = z.length(); k-- > 0;) {
              ArgVector hn;
              hn.reserve(rest.size() + 1);
              hn.push_back(drop_lsb(z, k + 1));
              hn.insert(hn.end(), rest.begin(), rest.end());
              ArgVector hs;
              hs.reserve(safes.size() + 1);
              hs.push_back(std::move(acc));
              hs.insert(hs.end(), safes.begin(), safes.end());
              const BExpr& h = z.bit(k) == Bit::b1 ? *r.h1 : *r.h0;
              acc = eval_value(h, hn, hs);
            }
            return acc;
          },
      },
      e.node);
}

TimedResult eval_entry(const BExprPtr& e, const ArgVector& normals,
                       const ArgVector& safes) {
  BArity a = arity_b(e);
  if (a.normal != normals.size() || a.safe != safes.size())
    throw EvalError("expression has arity " + show(a) + " but (" +
                    std::to_string(normals.size()) + ", " +
                    std::to_string(safes.size()) + ") arguments given");
  return eval_node(*e, normals, safes);
}

MPoly pol_b_impl(const BExpr& e) {
  return std::visit(
      overloaded{
          [](const BExpr::Zero&) { return MPoly::constant(0, 0); },
          [](const BExpr::Proj& p) {
            return p.index < p.normal ? MPoly::variable(p.normal, p.index)
                                      : MPoly::constant(p.normal, 0);
          },
          [](const BExpr::Succ&) { return MPoly::constant(0, 1); },
          [](const BExpr::Pred&) { return MPoly::constant(0, 0); },
          [](const BExpr::Cond&) { return MPoly::constant(0, 0); },
          [](const BExpr::Comp& c) {
            std::vector<MPoly> gn;
            gn.reserve(c.gn.size());
            for (const auto& g : c.gn) gn.push_back(pol_b_impl(*g));
            MPoly out = compose(pol_b_impl(*c.h), gn, c.normal);
            for (const auto& g : c.gs) out = add(out, pol_b_impl(*g));
            return out;
          },
          [](const BExpr::Rec& r) {
            MPoly steps = add(pol_b_impl(*r.h0), pol_b_impl(*r.h1));
            return add(shift(pol_b_impl(*r.g)),
                       mul(MPoly::variable(steps.num_vars(), 0), steps));
          },
      },
      e.node);
}

MPoly pol_time_impl(const BExpr& e) {
  return std::visit(
      overloaded{
          [](const BExpr::Zero&) { return MPoly::constant(0, 1); },
          [](const BExpr::Proj& p) { return MPoly::constant(p.normal, 1); },
          [](const BExpr::Succ&) { return MPoly::constant(0, 1); },
          [](const BExpr::Pred&) { return MPoly::constant(0, 1); },
          [](const BExpr::Cond&) { return MPoly::constant(0, 1); },
          [](const BExpr::Comp& c) {
            std::vector<MPoly> gn_size;
            gn_size.reserve(c.gn.size());
            for (const auto& g : c.gn) gn_size.push_back(pol_b_impl(*g));
            MPoly out = compose(pol_time_impl(*c.h), gn_size, c.normal);
            for (const auto& g : c.gn) out = add(out, pol_time_impl(*g));
            for (const auto& g : c.gs) out = add(out, pol_time_impl(*g));
            return out;
          },
          [](const BExpr::Rec& r) {
            MPoly steps = add(pol_time_impl(*r.h0), pol_time_impl(*r.h1));
            return add(shift(pol_time_impl(*r.g)),
                       mul(MPoly::variable(steps.num_vars(), 0), steps));
          },
      },
      e.node);
}

BExprPtr make(BExpr::Node node) {
  return std::make_shared<const BExpr>(BExpr{std::move(node)});
}

// A constant of the given length at arity (n, 0): iterated s1 over Zero,
// lifted by an argument-ignoring composition.
BExprPtr lift_const(std::size_t n, const Nat& c) {
  BExprPtr acc = b_zero();
  for (Nat k = 0; k < c; ++k) acc = b_comp(0, 0, b_succ(Bit::b1), {}, {acc});
  return b_comp(n, 0, std::move(acc), {}, {});
}

}  // namespace

BExprPtr b_zero() {
  static const BExprPtr e = make(BExpr::Zero{});
  return e;
}

BExprPtr b_proj(std::size_t i, std::size_t n, std::size_t s) {
  return make(BExpr::Proj{i, n, s});
}

BExprPtr b_succ(Bit b) {
  static const BExprPtr s0 = make(BExpr::Succ{Bit::b0});
  static const BExprPtr s1 = make(BExpr::Succ{Bit::b1});
  return b == Bit::b1 ? s1 : s0;
}

BExprPtr b_pred() {
  static const BExprPtr e = make(BExpr::Pred{});
  return e;
}

BExprPtr b_cond() {
  static const BExprPtr e = make(BExpr::Cond{});
  return e;
}

BExprPtr b_comp(std::size_t n, std::size_t s, BExprPtr h,
                std::vector<BExprPtr> gn, std::vector<BExprPtr> gs) {
  return make(BExpr::Comp{n, s, std::move(h), std::move(gn), std::move(gs)});
}

BExprPtr b_rec(BExprPtr g, BExprPtr h0, BExprPtr h1) {
  return make(BExpr::Rec{std::move(g), std::move(h0), std::move(h1)});
}

BExprPtr b_plus() {
  static const BExprPtr e = [] {
    BExprPtr h = b_comp(1, 2, b_succ(Bit::b1), {}, {b_proj(1, 1, 2)});
    return b_rec(b_proj(0, 0, 1), h, h);
  }();
  return e;
}

BExprPtr b_mult() {
  static const BExprPtr e = [] {
    BExprPtr g = b_comp(1, 0, b_zero(), {}, {});
    BExprPtr h = b_comp(2, 1, b_plus(), {b_proj(1, 2, 0)}, {b_proj(2, 2, 1)});
    return b_rec(g, h, h);
  }();
  return e;
}

BExprPtr b_one() {
  static const BExprPtr e =
      b_comp(1, 1, b_succ(Bit::b1), {}, {b_comp(1, 1, b_zero(), {}, {})});
  return e;
}

BArity arity_b(const BExprPtr& e) {
  std::vector<PathFrame> path;
  return arity_impl(*e, path);
}

Bitstring eval_b(const BExprPtr& e, const ArgVector& normals,
                 const ArgVector& safes) {
  BArity a = arity_b(e);
  if (a.normal != normals.size() || a.safe != safes.size())
    throw EvalError("expression has arity " + show(a) + " but (" +
                    std::to_string(normals.size()) + ", " +
                    std::to_string(safes.size()) + ") arguments given");
  return eval_value(*e, normals, safes);
}

TimedResult eval_b_timed(const BExprPtr& e, const ArgVector& normals,
                         const ArgVector& safes) {
  return eval_entry(e, normals, safes);
}

MPoly pol_b(const BExprPtr& e) {
  arity_b(e);
  return pol_b_impl(*e);
}

MPoly pol_time(const BExprPtr& e) {
  arity_b(e);
  return pol_time_impl(*e);
}

BExprPtr poly_to_b(const MPoly& p) {
  const std::size_t n = p.num_vars();
  BExprPtr sum;
  for (const auto& m : p.monomials()) {
    BExprPtr term = lift_const(n, m.coeff);
    for (const auto& [v, pow] : m.factors)
      for (std::size_t k = 0; k < pow; ++k)
        term = b_comp(n, 0, b_mult(), {term, b_proj(v, n, 0)}, {});
    // plus adds the lengths; the second summand rides in a safe slot.
    sum = sum ? b_comp(n, 0, b_plus(), {sum}, {term}) : term;
  }
  return sum ? sum : b_comp(n, 0, b_zero(), {}, {});
}

Envelope ppt_envelope(const BExprPtr& e) {
  Envelope out;
  out.size_bound = add(UPoly::constant(1),
                       mul(UPoly::constant(2), univariate_collapse(pol_b(e))));
  out.time_bound = univariate_collapse(pol_time(e));
  return out;
}

std::size_t node_count(const BExprPtr& e) {
  return std::visit(
      overloaded{
          [](const BExpr::Comp& c) {
            std::size_t n = 1 + node_count(c.h);
            for (const auto& g : c.gn) n += node_count(g);
            for (const auto& g : c.gs) n += node_count(g);
            return n;
          },
          [](const BExpr::Rec& r) {
            return 1 + node_count(r.g) + node_count(r.h0) + node_count(r.h1);
          },
          [](const auto&) -> std::size_t { return 1; },
      },
      e->node);
}

bool structurally_equal(const BExprPtr& a, const BExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const BExpr::Proj& p) {
            const auto& q = std::get<BExpr::Proj>(b->node);
            return p.index == q.index && p.normal == q.normal &&
                   p.safe == q.safe;
          },
          [&](const BExpr::Succ& s) {
            return s.bit == std::get<BExpr::Succ>(b->node).bit;
          },
          [&](const BExpr::Comp& c) {
            const auto& d = std::get<BExpr::Comp>(b->node);
            if (c.normal != d.normal || c.safe != d.safe ||
                c.gn.size() != d.gn.size() || c.gs.size() != d.gs.size())
              return false;
            if (!structurally_equal(c.h, d.h)) return false;
            for (std::size_t i = 0; i < c.gn.size(); ++i)
              if (!structurally_equal(c.gn[i], d.gn[i])) return false;
            for (std::size_t i = 0; i < c.gs.size(); ++i)
              if (!structurally_equal(c.gs[i], d.gs[i])) return false;
            return true;
          },
          [&](const BExpr::Rec& r) {
            const auto& s = std::get<BExpr::Rec>(b->node);
            return structurally_equal(r.g, s.g) &&
                   structurally_equal(r.h0, s.h0) &&
                   structurally_equal(r.h1, s.h1);
          },
          [](const auto&) { return true; },
      },
      a->node);
}

namespace {

BInfExprPtr make_inf(BInfExpr::Node node) {
  return std::make_shared<const BInfExpr>(BInfExpr{std::move(node)});
}

// A lower bound on one arity coordinate. Exact bounds come from the fixed
// primitives (succ, pred, cond, zero) and propagate up; AtLeast bounds come
// from projection indices and resolve to their minimum.
struct Bound {
  std::size_t value = 0;
  bool exact = false;
};

Bound exact(std::size_t v) { return {v, true}; }
Bound at_least(std::size_t v) { return {v, false}; }

Bound unify(Bound a, Bound b) {
  if (a.exact && b.exact) {
    if (a.value != b.value)
      throw InferError("conflicting arity requirements: exactly " +
                       std::to_string(a.value) + " vs exactly " +
                       std::to_string(b.value));
    return a;
  }
  if (!a.exact && !b.exact) return at_least(std::max(a.value, b.value));
  Bound e = a.exact ? a : b;
  Bound m = a.exact ? b : a;
  if (e.value < m.value)
    throw InferError("conflicting arity requirements: exactly " +
                     std::to_string(e.value) + " vs at least " +
                     std::to_string(m.value));
  return e;
}

Bound plus_one(Bound b) { return {b.value + 1, b.exact}; }

Bound minus_one(Bound b) {
  if (b.exact) {
    if (b.value == 0)
      throw InferError(
          "recursion step function must take at least one safe argument");
    return exact(b.value - 1);
  }
  return at_least(b.value == 0 ? 0 : b.value - 1);
}

struct Shape {
  Bound n, s;
};

Shape shape_of(const BInfExpr& e) {
  return std::visit(
      overloaded{
          [](const BInfExpr::Zero&) { return Shape{exact(0), exact(0)}; },
          [](const BInfExpr::ProjN& p) {
            return Shape{at_least(p.index + 1), at_least(0)};
          },
          [](const BInfExpr::ProjS& p) {
            return Shape{at_least(0), at_least(p.index + 1)};
          },
          [](const BInfExpr::Succ&) { return Shape{exact(0), exact(1)}; },
          [](const BInfExpr::Pred&) { return Shape{exact(0), exact(1)}; },
          [](const BInfExpr::Cond&) { return Shape{exact(0), exact(4)}; },
          [](const BInfExpr::Comp& c) {
            Shape h = shape_of(*c.h);
            unify(h.n, exact(c.gn.size()));
            unify(h.s, exact(c.gs.size()));
            Bound n = at_least(0), s = at_least(0);
            for (const auto& g : c.gn) {
              Shape sg = shape_of(*g);
              n = unify(n, sg.n);
              unify(sg.s, exact(0));
            }
            for (const auto& g : c.gs) {
              Shape sg = shape_of(*g);
              n = unify(n, sg.n);
              s = unify(s, sg.s);
            }
            return Shape{n, s};
          },
          [](const BInfExpr::Rec& r) {
            Shape g = shape_of(*r.g);
            Shape h = shape_of(*r.h0);
            Shape h1 = shape_of(*r.h1);
            h.n = unify(h.n, h1.n);
            h.s = unify(h.s, h1.s);
            return Shape{unify(plus_one(g.n), h.n),
                         unify(g.s, minus_one(h.s))};
          },
      },
      e.node);
}

std::size_t resolve(Bound b, std::size_t floor, const char* which) {
  if (b.exact) {
    if (floor > b.value)
      throw InferError(std::string("cannot raise ") + which +
                       " arity above its exact value " +
                       std::to_string(b.value) + " (floor " +
                       std::to_string(floor) + ")");
    return b.value;
  }
  return std::max(b.value, floor);
}

BExprPtr annotate(const BInfExpr& e, std::size_t n, std::size_t s) {
  auto require = [&](std::size_t wn, std::size_t ws, const char* what) {
    if (n != wn || s != ws)
      throw InferError(std::string(what) + " has arity (" +
                       std::to_string(wn) + ", " + std::to_string(ws) +
                       ") but context requires (" + std::to_string(n) + ", " +
                       std::to_string(s) + ")");
  };
  return std::visit(
      overloaded{
          [&](const BInfExpr::Zero&) {
            require(0, 0, "zero");
            return b_zero();
          },
          [&](const BInfExpr::ProjN& p) {
            if (p.index >= n)
              throw InferError("normal projection index " +
                               std::to_string(p.index) +
                               " out of range for normal count " +
                               std::to_string(n));
            return b_proj(p.index, n, s);
          },
          [&](const BInfExpr::ProjS& p) {
            if (p.index >= s)
              throw InferError("safe projection index " +
                               std::to_string(p.index) +
                               " out of range for safe count " +
                               std::to_string(s));
            return b_proj(n + p.index, n, s);
          },
          [&](const BInfExpr::Succ& x) {
            require(0, 1, "succ");
            return b_succ(x.bit);
          },
          [&](const BInfExpr::Pred&) {
            require(0, 1, "pred");
            return b_pred();
          },
          [&](const BInfExpr::Cond&) {
            require(0, 4, "cond");
            return b_cond();
          },
          [&](const BInfExpr::Comp& c) {
            BExprPtr h = annotate(*c.h, c.gn.size(), c.gs.size());
            std::vector<BExprPtr> gn, gs;
            gn.reserve(c.gn.size());
            gs.reserve(c.gs.size());
            for (const auto& g : c.gn) gn.push_back(annotate(*g, n, 0));
            for (const auto& g : c.gs) gs.push_back(annotate(*g, n, s));
            return b_comp(n, s, std::move(h), std::move(gn), std::move(gs));
          },
          [&](const BInfExpr::Rec& r) {
            if (n == 0)
              throw InferError(
                  "recursion requires at least one normal argument");
            BExprPtr g = annotate(*r.g, n - 1, s);
            BExprPtr h0 = annotate(*r.h0, n, s + 1);
            BExprPtr h1 = annotate(*r.h1, n, s + 1);
            return b_rec(std::move(g), std::move(h0), std::move(h1));
          },
      },
      e.node);
}

}  // namespace

BInfExprPtr binf_zero() {
  static const BInfExprPtr e = make_inf(BInfExpr::Zero{});
  return e;
}

BInfExprPtr binf_proj_n(std::size_t i) { return make_inf(BInfExpr::ProjN{i}); }

BInfExprPtr binf_proj_s(std::size_t i) { return make_inf(BInfExpr::ProjS{i}); }

BInfExprPtr binf_succ(Bit b) { return make_inf(BInfExpr::Succ{b}); }

BInfExprPtr binf_pred() {
  static const BInfExprPtr e = make_inf(BInfExpr::Pred{});
  return e;
}

BInfExprPtr binf_cond() {
  static const BInfExprPtr e = make_inf(BInfExpr::Cond{});
  return e;
}

BInfExprPtr binf_comp(BInfExprPtr h, std::vector<BInfExprPtr> gn,
                      std::vector<BInfExprPtr> gs) {
  return make_inf(BInfExpr::Comp{std::move(h), std::move(gn), std::move(gs)});
}

BInfExprPtr binf_rec(BInfExprPtr g, BInfExprPtr h0, BInfExprPtr h1) {
  return make_inf(BInfExpr::Rec{std::move(g), std::move(h0), std::move(h1)});
}

BExprPtr infer(const BInfExprPtr& e, std::optional<BArity> floor) {
  Shape top = shape_of(*e);
  std::size_t n = resolve(top.n, floor ? floor->normal : 0, "normal");
  std::size_t s = resolve(top.s, floor ? floor->safe : 0, "safe");
  return annotate(*e, n, s);
}

BInfExprPtr erase(const BExprPtr& e) {
  arity_b(e);
  return std::visit(
      overloaded{
          [](const BExpr::Zero&) { return binf_zero(); },
          [](const BExpr::Proj& p) {
            return p.index < p.normal ? binf_proj_n(p.index)
                                      : binf_proj_s(p.index - p.normal);
          },
          [](const BExpr::Succ& s) { return binf_succ(s.bit); },
          [](const BExpr::Pred&) { return binf_pred(); },
          [](const BExpr::Cond&) { return binf_cond(); },
          [](const BExpr::Comp& c) {
            std::vector<BInfExprPtr> gn, gs;
            gn.reserve(c.gn.size());
            gs.reserve(c.gs.size());
            for (const auto& g : c.gn) gn.push_back(erase(g));
            for (const auto& g : c.gs) gs.push_back(erase(g));
            return binf_comp(erase(c.h), std::move(gn), std::move(gs));
          },
          [](const BExpr::Rec& r) {
            return binf_rec(erase(r.g), erase(r.h0), erase(r.h1));
          },
      },
      e->node);
}

bool structurally_equal(const BInfExprPtr& a, const BInfExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const BInfExpr::ProjN& p) {
            return p.index == std::get<BInfExpr::ProjN>(b->node).index;
          },
          [&](const BInfExpr::ProjS& p) {
            return p.index == std::get<BInfExpr::ProjS>(b->node).index;
          },
          [&](const BInfExpr::Succ& s) {
            return s.bit == std::get<BInfExpr::Succ>(b->node).bit;
          },
          [&](const BInfExpr::Comp& c) {
            const auto& d = std::get<BInfExpr::Comp>(b->node);
            if (c.gn.size() != d.gn.size() || c.gs.size() != d.gs.size())
              return false;
            if (!structurally_equal(c.h, d.h)) return false;
            for (std::size_t i = 0; i < c.gn.size(); ++i)
              if (!structurally_equal(c.gn[i], d.gn[i])) return false;
            for (std::size_t i = 0; i < c.gs.size(); ++i)
              if (!structurally_equal(c.gs[i], d.gs[i])) return false;
            return true;
          },
          [&](const BInfExpr::Rec& r) {
            const auto& s = std::get<BInfExpr::Rec>(b->node);
            return structurally_equal(r.g, s.g) &&
                   structurally_equal(r.h0, s.h0) &&
                   structurally_equal(r.h1, s.h1);
          },
          [](const auto&) { return true; },
      },
      a->node);
}

}  // namespace polytime
