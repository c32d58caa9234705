#include "polytime/cobham.hpp"

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

std::size_t arity_impl(const CExpr& e, std::vector<PathFrame>& path) {
  return std::visit(
      overloaded{
          [](const CExpr::O&) -> std::size_t { return 0; },
          [&](const CExpr::Proj& p) -> std::size_t {
            if (p.index >= p.arity)
              throw IllFormed(join_path(path),
                              "projection requires i < n, got i = " +
                                  std::to_string(p.index) +
                                  ", n = " + std::to_string(p.arity));
            return p.arity;
          },
          [](const CExpr::Succ&) -> std::size_t { return 1; },
          [](const CExpr::Smash&) -> std::size_t { return 2; },
          [&](const CExpr::Comp& c) -> std::size_t {
            path.push_back({"comp.h", kNoIndex});
            std::size_t ah = arity_impl(*c.h, path);
            path.pop_back();
            if (c.gs.size() != ah)
              throw IllFormed(join_path(path),
                              "composition requires |g| = A(h): A(h) = " +
                                  std::to_string(ah) + " but " +
                                  std::to_string(c.gs.size()) +
                                  " arguments given");
            for (std::size_t i = 0; i < c.gs.size(); ++i) {
              path.push_back({"comp.g", i});
              std::size_t ag = arity_impl(*c.gs[i], path);
              if (ag != c.arity)
                throw IllFormed(join_path(path),
                                "composition argument has arity " +
                                    std::to_string(ag) + ", expected " +
                                    std::to_string(c.arity));
              path.pop_back();
            }
            return c.arity;
          },
          [&](const CExpr::Rec& r) -> std::size_t {
            path.push_back({"rec.g", kNoIndex});
            std::size_t ag = arity_impl(*r.g, path);
            path.pop_back();
            path.push_back({"rec.h0", kNoIndex});
            std::size_t ah0 = arity_impl(*r.h0, path);
            path.pop_back();
            path.push_back({"rec.h1", kNoIndex});
            std::size_t ah1 = arity_impl(*r.h1, path);
            path.pop_back();
            path.push_back({"rec.j", kNoIndex});
            std::size_t aj = arity_impl(*r.j, path);
            path.pop_back();
            if (ah0 != ah1 || ah0 != ag + 2 || ah0 != aj + 1)
              throw IllFormed(
                  join_path(path),
                  "recursion requires A(h0) = A(h1) = A(g)+2 = A(j)+1; got "
                  "A(g) = " + std::to_string(ag) +
                  ", A(h0) = " + std::to_string(ah0) +
                  ", A(h1) = " + std::to_string(ah1) +
                  ", A(j) = " + std::to_string(aj));
            return aj;
          },
      },
      e.node);
}

std::string render_args(const ArgVector& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += render_literal(args[i]);
  }
  return out + ")";
}

class Evaluator {
 public:
  explicit Evaluator(bool checked) : checked_(checked) {}

  Bitstring eval(const CExpr& e, const ArgVector& args) {
    return std::visit(
        overloaded{
            [&](const CExpr::O&) { return Bitstring(); },
            [&](const CExpr::Proj& p) { return args[p.index]; },
            [&](const CExpr::Succ& s) { return append_lsb(args[0], s.bit); },
            [&](const CExpr::Smash&) {
              std::vector<Bit> bits(args[0].length() * args[1].length() + 1,
                                    Bit::b0);
              bits.front() = Bit::b1;
              return Bitstring(std::move(bits));
            },
            [&](const CExpr::Comp& c) {
              ArgVector inner;
              inner.reserve(c.gs.size());
              for (std::size_t i = 0; i < c.gs.size(); ++i) {
                push({"comp.g", i});
                inner.push_back(eval(*c.gs[i], args));
                pop();
              }
              push({"comp.h", kNoIndex});
              Bitstring out = eval(*c.h, inner);
              pop();
              return out;
            },
            [&](const CExpr::Rec& r) { return eval_rec(r, args); },
        },
        e.node);
  }

 private:
  void push(PathFrame f) {
    if (checked_) path_.push_back(f);
  }
  void pop() {
    if (checked_) path_.pop_back();
  }

  Bitstring eval_rec(const CExpr::Rec& r, const ArgVector& args) {
    const Bitstring& z = args.front();
    const ArgVector rest(args.begin() + 1, args.end());
    push({"rec.g", kNoIndex});
    Bitstring acc = eval(*r.g, rest);
    pop();
    const std::size_t m = z.length();
    if (checked_) check_bound(r, Bitstring(), rest, acc);
    for (std::size_t k = m; k-- > 0;) {
      ArgVector h_args;
      h_args.reserve(rest.size() + 2);
      h_args.push_back(drop_lsb(z, k + 1));
      h_args.push_back(std::move(acc));
      h_args.insert(h_args.end(), rest.begin(), rest.end());
      const bool one = z.bit(k) == Bit::b1;
      push({one ? "rec.h1" : "rec.h0", kNoIndex});
      acc = eval(one ? *r.h1 : *r.h0, h_args);
      pop();
      if (checked_) check_bound(r, drop_lsb(z, k), rest, acc);
    }
    return acc;
  }

  // |f(y, x)| <= |j(y, x)| on the prefix actually reached.
  void check_bound(const CExpr::Rec& r, Bitstring prefix, const ArgVector& rest,
                   const Bitstring& value) {
    ArgVector j_args;
    j_args.reserve(rest.size() + 1);
    j_args.push_back(std::move(prefix));
    j_args.insert(j_args.end(), rest.begin(), rest.end());
    push({"rec.j", kNoIndex});
    Bitstring bound = eval(*r.j, j_args);
    pop();
    if (value.length() > bound.length())
      throw BoundViolation(join_path(path_), render_args(j_args),
                           value.length(), bound.length());
  }

  bool checked_;
  std::vector<PathFrame> path_;
};

Bitstring eval_entry(const CExprPtr& e, const ArgVector& args, bool checked) {
  std::size_t n = arity_c(e);
  if (n != args.size())
    throw EvalError("expression has arity " + std::to_string(n) + " but " +
                    std::to_string(args.size()) + " arguments given");
  Evaluator ev(checked);
  return ev.eval(*e, args);
}

MPoly pol_c_impl(const CExpr& e) {
  return std::visit(
      overloaded{
          [](const CExpr::O&) { return MPoly::constant(0, 0); },
          [](const CExpr::Proj& p) { return MPoly::variable(p.arity, p.index); },
          [](const CExpr::Succ&) {
            return add(MPoly::variable(1, 0), MPoly::constant(1, 1));
          },
          [](const CExpr::Smash&) {
            return add(mul(MPoly::variable(2, 0), MPoly::variable(2, 1)),
                       MPoly::constant(2, 1));
          },
          [](const CExpr::Comp& c) {
            std::vector<MPoly> gs;
            gs.reserve(c.gs.size());
            for (const auto& g : c.gs) gs.push_back(pol_c_impl(*g));
            return compose(pol_c_impl(*c.h), gs, c.arity);
          },
          [](const CExpr::Rec& r) { return pol_c_impl(*r.j); },
      },
      e.node);
}

CExprPtr make(CExpr::Node node) {
  return std::make_shared<const CExpr>(CExpr{std::move(node)});
}

// Arity-n constant: a chain of c successor bits over O, so the length is c.
CExprPtr const_of(std::size_t n, const Nat& c) {
  CExprPtr acc = c_comp(n, c_zero(), {});
  for (Nat k = 0; k < c; ++k) acc = c_comp(n, c_succ(Bit::b1), {acc});
  return acc;
}

// Length addition: |add2(x, y)| = |x| + |y|, by appending one bit per bit of
// x. The j bound is #(x0, y0), whose length (|x|+1)(|y|+1)+1 dominates.
CExprPtr length_add() {
  static const CExprPtr add2 = [] {
    CExprPtr h = c_comp(3, c_succ(Bit::b0), {c_proj(1, 3)});
    CExprPtr j = c_comp(2, c_smash(),
                        {c_comp(2, c_succ(Bit::b0), {c_proj(0, 2)}),
                         c_comp(2, c_succ(Bit::b0), {c_proj(1, 2)})});
    return c_rec(c_proj(0, 1), h, h, j);
  }();
  return add2;
}

// Length multiplication: pred cancels smash's leading 1, |mul2(x,y)| = |x|*|y|.
CExprPtr length_mul() {
  static const CExprPtr mul2 = c_comp(2, c_pred(), {c_smash()});
  return mul2;
}

}  // namespace

CExprPtr c_zero() {
  static const CExprPtr e = make(CExpr::O{});
  return e;
}

CExprPtr c_proj(std::size_t i, std::size_t n) {
  return make(CExpr::Proj{i, n});
}

CExprPtr c_succ(Bit b) {
  static const CExprPtr s0 = make(CExpr::Succ{Bit::b0});
  static const CExprPtr s1 = make(CExpr::Succ{Bit::b1});
  return b == Bit::b1 ? s1 : s0;
}

CExprPtr c_smash() {
  static const CExprPtr e = make(CExpr::Smash{});
  return e;
}

CExprPtr c_comp(std::size_t n, CExprPtr h, std::vector<CExprPtr> gs) {
  return make(CExpr::Comp{n, std::move(h), std::move(gs)});
}

CExprPtr c_rec(CExprPtr g, CExprPtr h0, CExprPtr h1, CExprPtr j) {
  return make(CExpr::Rec{std::move(g), std::move(h0), std::move(h1), std::move(j)});
}

CExprPtr c_pred() {
  static const CExprPtr e =
      c_rec(c_zero(), c_proj(0, 2), c_proj(0, 2), c_proj(0, 1));
  return e;
}

std::size_t arity_c(const CExprPtr& e) {
  std::vector<PathFrame> path;
  return arity_impl(*e, path);
}

Bitstring eval_c(const CExprPtr& e, const ArgVector& args) {
  return eval_entry(e, args, /*checked=*/false);
}

Bitstring eval_c_checked(const CExprPtr& e, const ArgVector& args) {
  return eval_entry(e, args, /*checked=*/true);
}

MPoly pol_c(const CExprPtr& e) {
  arity_c(e);  // reject ill-formed input
  return pol_c_impl(*e);
}

CExprPtr poly_to_c(const MPoly& p) {
  const std::size_t n = p.num_vars();
  CExprPtr sum;
  for (const auto& m : p.monomials()) {
    CExprPtr term = const_of(n, m.coeff);
    for (const auto& [v, pow] : m.factors)
      for (std::size_t k = 0; k < pow; ++k)
        term = c_comp(n, length_mul(), {term, c_proj(v, n)});
    sum = sum ? c_comp(n, length_add(), {sum, term}) : term;
  }
  return sum ? sum : c_comp(n, c_zero(), {});
}

std::size_t node_count(const CExprPtr& e) {
  return std::visit(
      overloaded{
          [](const CExpr::O&) -> std::size_t { return 1; },
          [](const CExpr::Proj&) -> std::size_t { return 1; },
          [](const CExpr::Succ&) -> std::size_t { return 1; },
          [](const CExpr::Smash&) -> std::size_t { return 1; },
          [](const CExpr::Comp& c) -> std::size_t {
            std::size_t n = 1 + node_count(c.h);
            for (const auto& g : c.gs) n += node_count(g);
            return n;
          },
          [](const CExpr::Rec& r) -> std::size_t {
            return 1 + node_count(r.g) + node_count(r.h0) + node_count(r.h1) +
                   node_count(r.j);
          },
      },
      e->node);
}

bool structurally_equal(const CExprPtr& a, const CExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [](const CExpr::O&) { return true; },
          [&](const CExpr::Proj& p) {
            const auto& q = std::get<CExpr::Proj>(b->node);
            return p.index == q.index && p.arity == q.arity;
          },
          [&](const CExpr::Succ& s) {
            return s.bit == std::get<CExpr::Succ>(b->node).bit;
          },
          [](const CExpr::Smash&) { return true; },
          [&](const CExpr::Comp& c) {
            const auto& d = std::get<CExpr::Comp>(b->node);
            if (c.arity != d.arity || c.gs.size() != d.gs.size()) return false;
            if (!structurally_equal(c.h, d.h)) return false;
            for (std::size_t i = 0; i < c.gs.size(); ++i)
              if (!structurally_equal(c.gs[i], d.gs[i])) return false;
            return true;
          },
          [&](const CExpr::Rec& r) {
            const auto& s = std::get<CExpr::Rec>(b->node);
            return structurally_equal(r.g, s.g) &&
                   structurally_equal(r.h0, s.h0) &&
                   structurally_equal(r.h1, s.h1) &&
                   structurally_equal(r.j, s.j);
          },
      },
      a->node);
}

}  // namespace polytime
