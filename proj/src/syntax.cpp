#include "polytime/syntax.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "polytime/errors.hpp"
#include "polytime/stdlib.hpp"

namespace polytime {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct SNode {
  std::size_t line = 1, col = 1;
  bool atom = false;
  std::string text;           // atom spelling
  std::vector<SNode> items;   // list elements
};

[[noreturn]] void fail(const SNode& n, const std::string& msg) {
  throw ParseError(n.line, n.col, msg);
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::vector<SNode> read_all() {
    std::vector<SNode> forms;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size()) return forms;
      forms.push_back(read_form());
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SNode read_form() {
    SNode n;
    n.line = line_;
    n.col = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError(line_, col_, "unexpected ')'");
    if (c == '(') {
      advance();
      for (;;) {
        skip_blank();
        if (pos_ >= text_.size())
          throw ParseError(n.line, n.col, "unclosed '('");
        if (text_[pos_] == ')') {
          advance();
          return n;
        }
        n.items.push_back(read_form());
      }
    }
    n.atom = true;
    while (pos_ < text_.size()) {
      char a = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(a)) || a == '(' ||
          a == ')' || a == ';')
        break;
      n.text.push_back(a);
      advance();
    }
    return n;
  }

  const std::string& text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

std::size_t to_nat(const SNode& n, const char* what) {
  if (!n.atom || n.text.empty()) fail(n, std::string("expected ") + what);
  for (char c : n.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(n, std::string("expected ") + what + ", got \"" + n.text + "\"");
  return static_cast<std::size_t>(std::stoull(n.text));
}

Bit to_bit(const SNode& n) {
  if (n.atom && n.text == "0") return Bit::b0;
  if (n.atom && n.text == "1") return Bit::b1;
  fail(n, "expected bit 0 or 1");
}

const SNode& sublist(const SNode& n, std::size_t i, const char* what) {
  const SNode& s = n.items[i];
  if (s.atom) fail(s, std::string("expected a parenthesized ") + what);
  return s;
}

bool is_form(const SNode& n, const char* head) {
  return !n.atom && !n.items.empty() && n.items[0].atom &&
         n.items[0].text == head;
}

void check_arms(const SNode& n, std::size_t count, const char* shape) {
  if (n.items.size() != count)
    fail(n, std::string("expected ") + shape + ", got " +
                std::to_string(n.items.size() - 1) + " argument(s)");
}

CExprPtr conv_c(const SNode& n, const std::map<std::string, CExprPtr>& defs) {
  if (n.atom) {
    if (n.text == "O") return c_zero();
    if (n.text == "smash") return c_smash();
    if (auto it = defs.find(n.text); it != defs.end()) return it->second;
    for (const Def& d : all_defs())
      if (d.name == n.text) {
        if (d.cls != FnClass::C)
          fail(n, "\"" + n.text + "\" is a class-B definition");
        return d.c_expr;
      }
    fail(n, "unknown identifier \"" + n.text + "\"");
  }
  if (n.items.empty() || !n.items[0].atom) fail(n, "expected an operator");
  const std::string& head = n.items[0].text;
  if (head == "proj") {
    check_arms(n, 3, "(proj i n)");
    return c_proj(to_nat(n.items[1], "index"), to_nat(n.items[2], "arity"));
  }
  if (head == "succ") {
    check_arms(n, 2, "(succ 0|1)");
    return c_succ(to_bit(n.items[1]));
  }
  if (head == "comp") {
    check_arms(n, 4, "(comp n h (g ...))");
    std::size_t arity = to_nat(n.items[1], "arity");
    CExprPtr h = conv_c(n.items[2], defs);
    std::vector<CExprPtr> gs;
    for (const SNode& g : sublist(n, 3, "argument list").items)
      gs.push_back(conv_c(g, defs));
    return c_comp(arity, std::move(h), std::move(gs));
  }
  if (head == "rec") {
    check_arms(n, 5, "(rec g h0 h1 j)");
    return c_rec(conv_c(n.items[1], defs), conv_c(n.items[2], defs),
                 conv_c(n.items[3], defs), conv_c(n.items[4], defs));
  }
  if (head == "def") fail(n, "def is only allowed at top level");
  fail(n, "unknown form \"" + head + "\"");
}

BExprPtr conv_b(const SNode& n, const std::map<std::string, BExprPtr>& defs) {
  if (n.atom) {
    if (n.text == "zero") return b_zero();
    if (n.text == "pred") return b_pred();
    if (n.text == "cond") return b_cond();
    if (auto it = defs.find(n.text); it != defs.end()) return it->second;
    for (const Def& d : all_defs())
      if (d.name == n.text) {
        if (d.cls != FnClass::B)
          fail(n, "\"" + n.text + "\" is a class-C definition");
        return d.b_expr;
      }
    fail(n, "unknown identifier \"" + n.text + "\"");
  }
  if (n.items.empty() || !n.items[0].atom) fail(n, "expected an operator");
  const std::string& head = n.items[0].text;
  if (head == "pi") {
    check_arms(n, 4, "(pi i n s)");
    return b_proj(to_nat(n.items[1], "index"),
                  to_nat(n.items[2], "normal count"),
                  to_nat(n.items[3], "safe count"));
  }
  if (head == "succ") {
    check_arms(n, 2, "(succ 0|1)");
    return b_succ(to_bit(n.items[1]));
  }
  if (head == "comp") {
    check_arms(n, 6, "(comp n s h (gN ...) (gS ...))");
    std::size_t normal = to_nat(n.items[1], "normal count");
    std::size_t safe = to_nat(n.items[2], "safe count");
    BExprPtr h = conv_b(n.items[3], defs);
    std::vector<BExprPtr> gn, gs;
    for (const SNode& g : sublist(n, 4, "normal argument list").items)
      gn.push_back(conv_b(g, defs));
    for (const SNode& g : sublist(n, 5, "safe argument list").items)
      gs.push_back(conv_b(g, defs));
    return b_comp(normal, safe, std::move(h), std::move(gn), std::move(gs));
  }
  if (head == "rec") {
    check_arms(n, 4, "(rec g h0 h1)");
    return b_rec(conv_b(n.items[1], defs), conv_b(n.items[2], defs),
                 conv_b(n.items[3], defs));
  }
  if (head == "def") fail(n, "def is only allowed at top level");
  fail(n, "unknown form \"" + head + "\"");
}

BInfExprPtr conv_binf(const SNode& n,
                      const std::map<std::string, BInfExprPtr>& defs) {
  if (n.atom) {
    if (n.text == "zero") return binf_zero();
    if (n.text == "pred") return binf_pred();
    if (n.text == "cond") return binf_cond();
    if (auto it = defs.find(n.text); it != defs.end()) return it->second;
    fail(n, "unknown identifier \"" + n.text + "\"");
  }
  if (n.items.empty() || !n.items[0].atom) fail(n, "expected an operator");
  const std::string& head = n.items[0].text;
  if (head == "pn") {
    check_arms(n, 2, "(pn i)");
    return binf_proj_n(to_nat(n.items[1], "index"));
  }
  if (head == "ps") {
    check_arms(n, 2, "(ps i)");
    return binf_proj_s(to_nat(n.items[1], "index"));
  }
  if (head == "succ") {
    check_arms(n, 2, "(succ 0|1)");
    return binf_succ(to_bit(n.items[1]));
  }
  if (head == "comp") {
    check_arms(n, 4, "(comp h (gN ...) (gS ...))");
    BInfExprPtr h = conv_binf(n.items[1], defs);
    std::vector<BInfExprPtr> gn, gs;
    for (const SNode& g : sublist(n, 2, "normal argument list").items)
      gn.push_back(conv_binf(g, defs));
    for (const SNode& g : sublist(n, 3, "safe argument list").items)
      gs.push_back(conv_binf(g, defs));
    return binf_comp(std::move(h), std::move(gn), std::move(gs));
  }
  if (head == "rec") {
    check_arms(n, 4, "(rec g h0 h1)");
    return binf_rec(conv_binf(n.items[1], defs), conv_binf(n.items[2], defs),
                    conv_binf(n.items[3], defs));
  }
  if (head == "def") fail(n, "def is only allowed at top level");
  fail(n, "unknown form \"" + head + "\"");
}

template <class ExprT, class Conv>
ExprT parse_program(const std::string& text, Conv conv) {
  Reader reader(text);
  std::vector<SNode> forms = reader.read_all();
  std::map<std::string, ExprT> defs;
  std::optional<ExprT> main;
  for (const SNode& form : forms) {
    if (is_form(form, "def")) {
      if (form.items.size() != 3 || !form.items[1].atom)
        fail(form, "expected (def NAME expr)");
      const std::string& name = form.items[1].text;
      if (defs.count(name)) fail(form.items[1], "duplicate definition of \"" + name + "\"");
      defs.emplace(name, conv(form.items[2], defs));
    } else {
      if (main) fail(form, "multiple top-level expressions");
      main = conv(form, defs);
    }
  }
  if (!main) throw ParseError(1, 1, "no expression");
  return *main;
}

void print_c(const CExprPtr& e, std::string& out) {
  std::visit(
      overloaded{
          [&](const CExpr::O&) { out += "O"; },
          [&](const CExpr::Proj& p) {
            out += "(proj " + std::to_string(p.index) + " " +
                   std::to_string(p.arity) + ")";
          },
          [&](const CExpr::Succ& s) {
            out += s.bit == Bit::b1 ? "(succ 1)" : "(succ 0)";
          },
          [&](const CExpr::Smash&) { out += "smash"; },
          [&](const CExpr::Comp& c) {
            out += "(comp " + std::to_string(c.arity) + " ";
            print_c(c.h, out);
            out += " (";
            for (std::size_t i = 0; i < c.gs.size(); ++i) {
              if (i) out += " ";
              print_c(c.gs[i], out);
            }
            out += "))";
          },
          [&](const CExpr::Rec& r) {
            out += "(rec ";
            print_c(r.g, out);
            out += " ";
            print_c(r.h0, out);
            out += " ";
            print_c(r.h1, out);
            out += " ";
            print_c(r.j, out);
            out += ")";
          },
      },
      e->node);
}

void print_b(const BExprPtr& e, std::string& out) {
  std::visit(
      overloaded{
          [&](const BExpr::Zero&) { out += "zero"; },
          [&](const BExpr::Proj& p) {
            out += "(pi " + std::to_string(p.index) + " " +
                   std::to_string(p.normal) + " " + std::to_string(p.safe) +
                   ")";
          },
          [&](const BExpr::Succ& s) {
            out += s.bit == Bit::b1 ? "(succ 1)" : "(succ 0)";
          },
          [&](const BExpr::Pred&) { out += "pred"; },
          [&](const BExpr::Cond&) { out += "cond"; },
          [&](const BExpr::Comp& c) {
            out += "(comp " + std::to_string(c.normal) + " " +
                   std::to_string(c.safe) + " ";
            print_b(c.h, out);
            out += " (";
            for (std::size_t i = 0; i < c.gn.size(); ++i) {
              if (i) out += " ";
              print_b(c.gn[i], out);
            }
            out += ") (";
            for (std::size_t i = 0; i < c.gs.size(); ++i) {
              if (i) out += " ";
              print_b(c.gs[i], out);
            }
            out += "))";
          },
          [&](const BExpr::Rec& r) {
            out += "(rec ";
            print_b(r.g, out);
            out += " ";
            print_b(r.h0, out);
            out += " ";
            print_b(r.h1, out);
            out += ")";
          },
      },
      e->node);
}

void print_binf(const BInfExprPtr& e, std::string& out) {
  std::visit(
      overloaded{
          [&](const BInfExpr::Zero&) { out += "zero"; },
          [&](const BInfExpr::ProjN& p) {
            out += "(pn " + std::to_string(p.index) + ")";
          },
          [&](const BInfExpr::ProjS& p) {
            out += "(ps " + std::to_string(p.index) + ")";
          },
          [&](const BInfExpr::Succ& s) {
            out += s.bit == Bit::b1 ? "(succ 1)" : "(succ 0)";
          },
          [&](const BInfExpr::Pred&) { out += "pred"; },
          [&](const BInfExpr::Cond&) { out += "cond"; },
          [&](const BInfExpr::Comp& c) {
            out += "(comp ";
            print_binf(c.h, out);
            out += " (";
            for (std::size_t i = 0; i < c.gn.size(); ++i) {
              if (i) out += " ";
              print_binf(c.gn[i], out);
            }
            out += ") (";
            for (std::size_t i = 0; i < c.gs.size(); ++i) {
              if (i) out += " ";
              print_binf(c.gs[i], out);
            }
            out += "))";
          },
          [&](const BInfExpr::Rec& r) {
            out += "(rec ";
            print_binf(r.g, out);
            out += " ";
            print_binf(r.h0, out);
            out += " ";
            print_binf(r.h1, out);
            out += ")";
          },
      },
      e->node);
}

}  // namespace

CExprPtr parse_c_program(const std::string& text) {
  return parse_program<CExprPtr>(
      text, [](const SNode& n, const std::map<std::string, CExprPtr>& defs) {
        return conv_c(n, defs);
      });
}

BExprPtr parse_b_program(const std::string& text) {
  return parse_program<BExprPtr>(
      text, [](const SNode& n, const std::map<std::string, BExprPtr>& defs) {
        return conv_b(n, defs);
      });
}

BInfExprPtr parse_binf_program(const std::string& text) {
  return parse_program<BInfExprPtr>(
      text,
      [](const SNode& n, const std::map<std::string, BInfExprPtr>& defs) {
        return conv_binf(n, defs);
      });
}

std::string to_source(const CExprPtr& e) {
  std::string out;
  print_c(e, out);
  return out;
}

std::string to_source(const BExprPtr& e) {
  std::string out;
  print_b(e, out);
  return out;
}

std::string to_source(const BInfExprPtr& e) {
  std::string out;
  print_binf(e, out);
  return out;
}

}  // namespace polytime
