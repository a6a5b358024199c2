#include "ordgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordgraph/quotient.hpp"
#include "ordgraph/report.hpp"
#include "ordgraph/starword.hpp"

namespace ordgraph::cli {

namespace {

const char* kGrammar =
    "usage:\n"
    "  ordgraph check <file|builtin>\n"
    "  ordgraph analyze <src> [--level k] [--bound N] [--json]\n"
    "  ordgraph falpha <src> --level k [--dot]\n"
    "  ordgraph verdict <src> [--bound N] [--json]\n"
    "  ordgraph nonreturning <src> --vertex v --level k --min-blocks n [--depth d]\n"
    "  ordgraph eval <src> <operand> [';' <operand> ...]   operand: \"L * R\" | \"L\" | \"* R\"\n"
    "  ordgraph ord <expr> [<op> <expr>]   op: + x ^ cmp sub\n"
    "builtins: interval_omega2 two_loop two_plus_two long_path_trunc(N) cantor_trunc(L,K)\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "L * R" -> T_L T_R*; missing sides are the identity at the other side's source
StarWord parse_operand(const Presentation& p, const std::string& text) {
  auto star = text.find('*');
  std::string l = trim(text.substr(0, star));
  std::string r = star == std::string::npos ? "" : trim(text.substr(star + 1));
  if (l.empty() && r.empty()) throw UsageError("empty eval operand");
  if (star != std::string::npos && text.find('*', star + 1) != std::string::npos)
    throw UsageError("operand '" + text + "' has more than one '*'");
  std::optional<Path> L, R;
  if (!l.empty()) L = parse_word(p, l);
  if (!r.empty()) R = parse_word(p, r);
  if (!L) L = Path::identity(p, R->source());
  if (!R) R = Path::identity(p, L->source());
  return StarWord::make(*L, *R);
}

int cmd_check(const std::string& src, std::ostream& out) {
  Presentation p;
  std::error_code ec;
  if (std::filesystem::is_regular_file(src, ec)) {
    std::ifstream in(src);
    std::stringstream buf;
    buf << in.rdbuf();
    p = parse_presentation(buf.str(), std::filesystem::path(src).stem().string());
  } else {
    p = builtin(src);
  }
  auto rep = validate(p);
  if (!rep.ok()) {
    out << "invalid: " << p.name() << '\n';
    for (const auto& v : rep.violations) out << "  " << to_string(v.kind) << ' ' << v.generator << ": " << v.detail << '\n';
    return 1;
  }
  out << "valid: " << p.name() << " (" << p.vertex_count() << " vertices, " << p.generator_count()
      << " generators, max level " << p.max_level() << ")";
  if (p.metadata().analogue) out << " [finite analogue: " << p.metadata().note << "]";
  out << '\n';
  return 0;
}

int cmd_ord(const std::vector<std::string>& a, std::ostream& out) {
  if (a.size() != 1 && a.size() != 3) throw UsageError("ord takes <expr> or <expr> <op> <expr>");
  Ordinal x = parse_ordinal(a[0]);
  if (a.size() == 1) {
    out << to_string(x) << '\n';
    return 0;
  }
  Ordinal y = parse_ordinal(a[2]);
  const std::string& op = a[1];
  if (op == "+")
    out << to_string(add(x, y)) << '\n';
  else if (op == "x" || op == "*")
    out << to_string(mul(x, y)) << '\n';
  else if (op == "^")
    out << to_string(pow(x, y)) << '\n';
  else if (op == "sub")
    out << to_string(left_sub(x, y)) << '\n';
  else if (op == "cmp") {
    auto c = x <=> y;
    out << (c < 0 ? "Less" : c > 0 ? "Greater" : "Equal") << '\n';
  } else
    throw UsageError("unknown ord operator '" + op + "'");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ordinal graph analysis", "ordgraph"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string src;
  unsigned level = 0;
  std::size_t bound = kDefaultBound, min_blocks = 1, depth = 3;
  bool json_out = false, dot = false;
  std::string vertex;
  std::vector<std::string> rest;

  auto* check = app.add_subcommand("check", "validate a presentation");
  check->add_option("src", src, "DSL file or builtin")->required();

  auto* analyze = app.add_subcommand("analyze", "regularity, quotients and verdict");
  analyze->add_option("src", src)->required();
  auto* analyze_level = analyze->add_option("--level", level, "only this level");
  analyze->add_option("--bound", bound, "fibre class bound")->check(CLI::PositiveNumber);
  analyze->add_flag("--json", json_out);

  auto* fa = app.add_subcommand("falpha", "quotient digraph at a level");
  fa->add_option("src", src)->required();
  fa->add_option("--level", level)->required();
  fa->add_flag("--dot", dot);

  auto* verdict = app.add_subcommand("verdict", "conditions (V), (S) and the uniqueness verdict");
  verdict->add_option("src", src)->required();
  verdict->add_option("--bound", bound)->check(CLI::PositiveNumber);
  verdict->add_flag("--json", json_out);

  auto* nr = app.add_subcommand("nonreturning", "build a non-returning path");
  nr->add_option("src", src)->required();
  nr->add_option("--vertex", vertex)->required();
  nr->add_option("--level", level)->required();
  nr->add_option("--min-blocks", min_blocks)->required()->check(CLI::PositiveNumber);
  nr->add_option("--depth", depth, "depth of the bounded check");

  auto* ev = app.add_subcommand("eval", "reduce a product of star words");
  ev->add_option("src", src)->required();
  ev->add_option("operands", rest)->required();

  auto* ord = app.add_subcommand("ord", "ordinal calculator");
  ord->add_option("args", rest)->required()->allow_extra_args();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    err << kGrammar;
    return 2;
  }

  try {
    if (*check) return cmd_check(src, out);
    if (*ord) return cmd_ord(rest, out);

    Presentation p = load_presentation(src);
    if (*analyze) {
      std::vector<unsigned> levels;
      if (*analyze_level) levels.push_back(level);
      auto r = build_report(p, bound, levels);
      if (json_out) {
        out << nlohmann::json(r).dump(2) << '\n';
        for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      } else {
        out << render_text(r);
      }
      return 0;
    }
    if (*fa) {
      auto q = falpha(p, level);
      if (dot) {
        out << to_dot(p, q);
        return 0;
      }
      out << "F_" << level << ": " << q.comps.members.size() << " vertices, " << q.edges.size() << " edges\n";
      for (std::size_t c = 0; c < q.comps.members.size(); ++c) {
        out << "  [" << c << "]";
        for (VertexId v : q.comps.members[c]) out << ' ' << p.vertex_name(v);
        out << '\n';
      }
      for (const auto& e : q.edges) {
        out << "  " << p.generator(e.rep).name << ": [" << e.source << "] -> [" << e.range << "]  class {";
        for (std::size_t i = 0; i < e.members.size(); ++i) out << (i ? " " : "") << p.generator(e.members[i]).name;
        out << "}\n";
      }
      for (const auto& c : cycles_without_entry(q.graph())) {
        out << "  cycle without entry:";
        for (std::size_t e : c) out << ' ' << p.generator(q.edges[e].rep).name;
        out << '\n';
      }
      return 0;
    }
    if (*verdict) {
      auto r = build_report(p, bound, {});
      if (json_out) {
        nlohmann::json j = r;
        nlohmann::json v = {{"graph", j["graph"]},
                            {"conditionV", j["conditionV"]},
                            {"conditionS", j["conditionS"]},
                            {"ckUniqueness", j["ckUniqueness"]},
                            {"ckUniquenessOverall", j["ckUniqueness"].back()},
                            {"simplicity", j["simplicity"]},
                            {"version", j["version"]},
                            {"bounds", j["bounds"]}};
        out << v.dump(2) << '\n';
        for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      } else {
        out << "condition (V): " << (r.condition_v_holds ? "holds" : "fails") << '\n';
        out << "condition (S): " << r.condition_s_status;
        if (r.condition_s_detail) out << " (" << *r.condition_s_detail << ")";
        out << '\n';
        for (const auto& c : r.ck_uniqueness)
          out << "CK uniqueness at level " << c.level << ": " << c.status << (c.reason ? " (" + *c.reason + ")" : "")
              << '\n';
        out << "overall: " << r.ck_uniqueness.back().status << '\n';
        out << "simplicity: " << r.simplicity << '\n';
        for (const auto& w : r.warnings) out << "warning: " << w << '\n';
      }
      return 0;
    }
    if (*nr) {
      auto v = p.find_vertex(vertex);
      if (!v) throw UsageError("unknown vertex '" + vertex + "'");
      Path u = build_nonreturning(p, *v, min_blocks, level);
      auto chk = check_nonreturning_bounded(u, level, depth);
      out << to_word(u) << '\n';
      out << "length " << to_string(u.length()) << '\n';
      out << "bounded check (depth " << depth << "): " << (chk.ok ? "no violation" : "violation") << '\n';
      if (!chk.ok) {
        out << "  f = " << to_word(*chk.f) << ", beta = " << to_string(*chk.beta) << '\n';
        return 1;
      }
      return 0;
    }
    if (*ev) {
      std::string joined;
      for (const auto& a : rest) joined += (joined.empty() ? "" : " ") + a;
      std::optional<StarWord> acc;
      std::stringstream ss(joined);
      for (std::string part; std::getline(ss, part, ';');) {
        StarWord w = parse_operand(p, part);
        acc = acc ? multiply(*acc, w) : w;
      }
      if (!acc) throw UsageError("eval needs an operand");
      out << to_string(*acc) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return 2;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == PresentationError::Kind::Invalid ? 1 : 2;
  } catch (const OrdinalSyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotConstructible& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << kGrammar;
  return 2;
}

}  // namespace ordgraph::cli
