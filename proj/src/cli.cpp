#include "polytime/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "polytime/errors.hpp"
#include "polytime/stdlib.hpp"
#include "polytime/syntax.hpp"
#include "polytime/translate.hpp"

namespace polytime {

namespace {

const Def* find_def(const std::string& name, FnClass cls) {
  for (const Def& d : all_defs())
    if (d.name == name && d.cls == cls) return &d;
  return nullptr;
}

// A source argument is a stdlib name, a file path, or inline source text.
std::string source_text(const std::string& source) {
  std::ifstream in(source);
  if (!in) return source;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CExprPtr load_c(const std::string& source) {
  if (const Def* d = find_def(source, FnClass::C)) return d->c_expr;
  return parse_c_program(source_text(source));
}

BExprPtr load_b(const std::string& source) {
  if (const Def* d = find_def(source, FnClass::B)) return d->b_expr;
  return parse_b_program(source_text(source));
}

BInfExprPtr load_binf(const std::string& source) {
  return parse_binf_program(source_text(source));
}

ArgVector parse_arg_list(const std::string& csv) {
  ArgVector out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = csv.find(',', start);
    out.push_back(parse_literal(csv.substr(
        start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text << "\n";
}

std::string show_barity(BArity a) {
  return "(" + std::to_string(a.normal) + ", " + std::to_string(a.safe) + ")";
}

struct Options {
  std::string command;
  std::string source;
  std::string cls = "c";
  std::string args_csv, normal_csv, safe_csv;
  bool timed = false;
  bool checked = false;
  std::string kind = "length";
  std::string from_cls;  // translate's optional --class
  std::string from, to;
  std::string output;
  std::string floor;
};

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.command == "check") {
    if (o.cls == "c") {
      out << "arity: " << arity_c(load_c(o.source)) << "\n";
    } else if (o.cls == "b") {
      out << "arity: " << show_barity(arity_b(load_b(o.source))) << "\n";
    } else {
      BExprPtr e = infer(load_binf(o.source), std::nullopt);
      out << "arity: " << show_barity(arity_b(e)) << "\n";
    }
    return 0;
  }

  if (o.command == "run") {
    if (o.cls == "c") {
      if (o.timed) throw Error("--time requires --class b");
      CExprPtr e = load_c(o.source);
      ArgVector args = parse_arg_list(o.args_csv);
      Bitstring v = o.checked ? eval_c_checked(e, args) : eval_c(e, args);
      out << render_literal(v) << "\n";
      return 0;
    }
    if (o.cls == "b") {
      if (o.checked) throw Error("--checked requires --class c");
      BExprPtr e = load_b(o.source);
      ArgVector normals = parse_arg_list(o.normal_csv);
      ArgVector safes = parse_arg_list(o.safe_csv);
      if (o.timed) {
        TimedResult r = eval_b_timed(e, normals, safes);
        out << render_literal(r.value) << "\n";
        out << "cost: " << r.cost << "\n";
      } else {
        out << render_literal(eval_b(e, normals, safes)) << "\n";
      }
      return 0;
    }
    throw Error("run requires --class c or --class b");
  }

  if (o.command == "bound") {
    if (o.kind == "length") {
      if (o.cls == "c") {
        out << print_canonical(pol_c(load_c(o.source))) << "\n";
        return 0;
      }
      if (o.cls == "b") {
        out << print_canonical(pol_b(load_b(o.source))) << "\n";
        return 0;
      }
    } else if (o.kind == "time") {
      if (o.cls == "b") {
        out << print_canonical(pol_time(load_b(o.source))) << "\n";
        return 0;
      }
    } else if (o.kind == "envelope") {
      if (o.cls == "b") {
        Envelope env = ppt_envelope(load_b(o.source));
        out << "F: " << print_canonical(env.size_bound) << "\n";
        out << "G: " << print_canonical(env.time_bound) << "\n";
        return 0;
      }
    }
    throw Error("bound --kind " + o.kind + " is not available for --class " +
                o.cls);
  }

  if (o.command == "translate") {
    if (!o.from_cls.empty() && o.from_cls != o.from)
      throw Error("--class " + o.from_cls + " does not match --from " +
                  o.from);
    if (o.from == o.to) throw Error("--from and --to must differ");
    if (o.from == "c") {
      CExprPtr e = load_c(o.source);
      err << "warning: RecBounded is assumed (checked only dynamically)\n";
      BExprPtr translated = c_to_b_closed(e);
      out << "nodes: " << node_count(translated) << "\n";
      out << "bound: " << print_canonical(pol_c_to_b(e)) << "\n";
      write_output(o.output, to_source(translated), out);
      return 0;
    }
    CExprPtr translated = b_to_c(load_b(o.source));
    out << "nodes: " << node_count(translated) << "\n";
    write_output(o.output, to_source(translated), out);
    return 0;
  }

  if (o.command == "infer") {
    std::optional<BArity> floor;
    if (!o.floor.empty()) {
      std::size_t comma = o.floor.find(',');
      if (comma == std::string::npos)
        throw Error("--floor expects \"n,s\"");
      floor = BArity{static_cast<std::size_t>(
                         std::stoull(o.floor.substr(0, comma))),
                     static_cast<std::size_t>(
                         std::stoull(o.floor.substr(comma + 1)))};
    }
    BExprPtr e = infer(load_binf(o.source), floor);
    out << "arity: " << show_barity(arity_b(e)) << "\n";
    write_output(o.output, to_source(e), out);
    return 0;
  }

  throw Error("unknown command " + o.command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cobham / Bellantoni-Cook polytime function-algebra toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", o.source, "stdlib name or source file")
        ->required();
  };
  auto add_class = [&](CLI::App* sub, bool with_binf) {
    auto values = with_binf ? std::vector<std::string>{"c", "b", "binf"}
                            : std::vector<std::string>{"c", "b"};
    sub->add_option("--class", o.cls, "expression class")
        ->check(CLI::IsMember(values));
  };

  CLI::App* check = app.add_subcommand("check", "arity-check an expression");
  add_source(check);
  add_class(check, true);

  CLI::App* run = app.add_subcommand("run", "evaluate an expression");
  add_source(run);
  add_class(run, false);
  run->add_option("--args", o.args_csv, "comma-separated literals (class C)");
  run->add_option("--normal", o.normal_csv,
                  "comma-separated normal literals (class B)");
  run->add_option("--safe", o.safe_csv,
                  "comma-separated safe literals (class B)");
  run->add_flag("--time", o.timed, "also print the abstract cost (class B)");
  run->add_flag("--checked", o.checked,
                "verify recursion bounds while evaluating (class C)");

  CLI::App* bound = app.add_subcommand("bound", "print a bounding polynomial");
  add_source(bound);
  add_class(bound, false);
  bound->add_option("--kind", o.kind, "length | time | envelope")
      ->check(CLI::IsMember({"length", "time", "envelope"}));

  CLI::App* translate =
      app.add_subcommand("translate", "compile between the classes");
  add_source(translate);
  translate->add_option("--class", o.from_cls,
                        "source class (must match --from)")
      ->check(CLI::IsMember({"c", "b"}));
  translate->add_option("--from", o.from, "source class")
      ->required()
      ->check(CLI::IsMember({"c", "b"}));
  translate->add_option("--to", o.to, "target class")
      ->required()
      ->check(CLI::IsMember({"c", "b"}));
  translate->add_option("-o,--output", o.output, "output file");

  CLI::App* infer_cmd =
      app.add_subcommand("infer", "annotate an arity-free B expression");
  add_source(infer_cmd);
  infer_cmd->add_option("--floor", o.floor, "minimum arity \"n,s\"");
  infer_cmd->add_option("-o,--output", o.output, "output file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("polyck");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  o.command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(o, out, err);
  } catch (const BoundViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polytime
