// tanglegcd: exact 4-tangle invariants, link determinants, the gcd embedding
// obstruction, realizability, and Fox colorings, over PD files and a small
// tangle-expression language.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "tanglegcd/algebra.hpp"
#include "tanglegcd/bracket.hpp"
#include "tanglegcd/coloring.hpp"
#include "tanglegcd/diagram.hpp"
#include "tanglegcd/fraction.hpp"
#include "tanglegcd/pd_io.hpp"

namespace tg = tanglegcd;

namespace {

constexpr int kExitError = 1;
constexpr int kExitObstructed = 2;  // `obstruct` proved the embedding impossible

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Strips '#' comments so expression files can carry notes.
std::string strip_comments(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    out += line.substr(0, line.find('#'));
    out += '\n';
  }
  return out;
}

// An inline expression, or a path to a file holding one.
tg::ExprPtr load_expression(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return tg::parse(strip_comments(read_file(arg)));
  return tg::parse(arg);
}

tg::AnyDiagram load_pd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return tg::read_pd(in);
}

struct Options {
  int cap = tg::kDefaultCrossingCap;
  bool machine = false;
};

void print_fraction(const Options& opt, const tg::FormalFraction& f) {
  if (opt.machine)
    std::cout << "fraction=" << tg::to_string(f) << "\n";
  else
    std::cout << tg::to_string(f) << "\n";
}

int cmd_eval(const Options& opt, const std::string& input, bool brute) {
  tg::ExprPtr e = load_expression(input);
  tg::FormalFraction f = tg::invariant(tg::eval_vector(e));
  if (brute) {
    tg::FormalFraction slow = tg::invariant(tg::to_diagram(e), opt.cap);
    if (!(slow == f))
      throw std::runtime_error("compositional and state-sum evaluations disagree: " +
                               tg::to_string(f) + " vs " + tg::to_string(slow));
  }
  print_fraction(opt, f);
  return 0;
}

int cmd_invariant(const Options& opt, const std::string& path) {
  tg::TangleDiagram t = std::get<tg::TangleDiagram>(load_pd(path));
  print_fraction(opt, tg::invariant(t, opt.cap));
  return 0;
}

int cmd_det(const Options& opt, const std::string& path) {
  tg::LinkDiagram l = std::get<tg::LinkDiagram>(load_pd(path));
  std::int64_t d = tg::determinant(l, opt.cap);
  if (opt.machine)
    std::cout << "determinant=" << d << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_obstruct(const Options& opt, const std::string& tangle_arg,
                 const std::string& link_path, std::optional<std::int64_t> link_det) {
  tg::FormalFraction f;
  if (std::filesystem::is_regular_file(tangle_arg) &&
      std::holds_alternative<tg::TangleDiagram>(load_pd(tangle_arg))) {
    f = tg::invariant(std::get<tg::TangleDiagram>(load_pd(tangle_arg)), opt.cap);
  } else {
    f = tg::invariant(tg::eval_vector(load_expression(tangle_arg)));
  }

  std::int64_t det = 0;
  if (link_det)
    det = *link_det;
  else
    det = tg::determinant(std::get<tg::LinkDiagram>(load_pd(link_path)), opt.cap);

  tg::ObstructionReport report = tg::obstruct(f, det);
  const char* verdict = report.divides ? "inconclusive" : "impossible";
  if (opt.machine) {
    std::cout << "fraction=" << tg::to_string(report.tangle_fraction) << "\n"
              << "gcd=" << report.gcd << "\n"
              << "link_det=" << report.link_determinant << "\n"
              << "divides=" << (report.divides ? 1 : 0) << "\n"
              << "verdict=" << verdict << "\n";
  } else {
    std::cout << "tangle invariant " << tg::to_string(report.tangle_fraction) << ", gcd "
              << report.gcd << ", link determinant " << report.link_determinant
              << ": embedding " << verdict << "\n";
  }
  return report.divides ? 0 : kExitObstructed;
}

int cmd_realize(const Options& opt, std::int64_t p, std::int64_t q, bool emit_pd) {
  tg::ExprPtr e = (p == 0 && q == 0) ? tg::realize_zero_zero() : tg::realize(p, q);
  if (opt.machine)
    std::cout << "expr=" << tg::print(e) << "\n";
  else
    std::cout << tg::print(e) << "\n";
  if (emit_pd) tg::write_pd(std::cout, tg::to_diagram(e));
  return 0;
}

int cmd_color(const Options& opt, const std::string& path, int mod, bool same_boundary) {
  tg::AnyDiagram d = load_pd(path);
  std::optional<tg::Coloring> coloring;
  if (auto* t = std::get_if<tg::TangleDiagram>(&d)) {
    coloring = tg::find_coloring(*t, mod, same_boundary);
  } else {
    if (same_boundary) throw std::runtime_error("--same-boundary needs a tangle PD file");
    coloring = tg::find_coloring(std::get<tg::LinkDiagram>(d), mod);
  }
  if (!coloring) {
    std::cout << (opt.machine ? "colorable=0\n" : "none\n");
    return 0;
  }
  if (opt.machine) {
    std::cout << "colorable=1\n";
    for (std::size_t i = 0; i < coloring->size(); ++i)
      std::cout << "color" << i << "=" << (*coloring)[i] << "\n";
  } else {
    for (std::size_t i = 0; i < coloring->size(); ++i)
      std::cout << "arc " << i << " -> " << (*coloring)[i] << "\n";
  }
  return 0;
}

// One expression per line; emits |p| and |q|, the determinants of the two
// closures, for each.
int cmd_table(const Options&, const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    tg::FormalFraction f;
    try {
      f = tg::invariant(tg::eval_vector(tg::parse(body)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    std::cout << tg::checked_abs(f.p) << "\t" << tg::checked_abs(f.q) << "\t" << body << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 4-tangle invariants and the gcd embedding obstruction"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--max-crossings", opt.cap,
                 "state-sum crossing cap (default " + std::to_string(tg::kDefaultCrossingCap) +
                     ")")
      ->envname("TANGLEGCD_MAX_CROSSINGS");
  app.add_flag("--machine", opt.machine, "key=value output for scripts");

  std::string eval_input;
  bool eval_brute = false;
  auto* eval = app.add_subcommand("eval", "invariant p/q of a tangle expression");
  eval->add_option("expr", eval_input, "expression or file")->required();
  eval->add_flag("--brute", eval_brute, "cross-check against the state-sum engine");

  std::string inv_path;
  auto* inv = app.add_subcommand("invariant", "invariant p/q of a tangle PD file");
  inv->add_option("pd-file", inv_path)->required()->check(CLI::ExistingFile);

  std::string det_path;
  auto* det = app.add_subcommand("det", "determinant of a link PD file");
  det->add_option("pd-file", det_path)->required()->check(CLI::ExistingFile);

  std::string obs_tangle, obs_link;
  std::optional<std::int64_t> obs_det;
  auto* obs = app.add_subcommand("obstruct", "gcd obstruction to embedding a tangle in a link");
  obs->add_option("--tangle", obs_tangle, "tangle expression or tangle PD file")->required();
  auto* obs_link_opt = obs->add_option("--link", obs_link, "link PD file");
  auto* obs_det_opt =
      obs->add_option("--det", obs_det, "known link determinant instead of a PD file");
  obs_link_opt->excludes(obs_det_opt);

  std::int64_t re_p = 0, re_q = 0;
  bool re_emit = false;
  auto* re = app.add_subcommand("realize", "tangle expression with invariant p/q");
  re->add_option("p", re_p)->required();
  re->add_option("q", re_q)->required();
  re->add_flag("--emit-pd", re_emit, "also print the compiled tangle PD");

  std::string color_path;
  int color_mod = 3;
  bool color_same = false;
  auto* color = app.add_subcommand("color", "Fox coloring of a PD file mod a prime");
  color->add_option("pd-file", color_path)->required()->check(CLI::ExistingFile);
  color->add_option("--mod", color_mod, "prime modulus")->required();
  color->add_flag("--same-boundary", color_same,
                  "require the four boundary-incident arcs to share one color");

  std::string table_path;
  auto* table = app.add_subcommand("table", "closure determinants for a file of expressions");
  table->add_option("expr-file", table_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(opt, eval_input, eval_brute);
    if (inv->parsed()) return cmd_invariant(opt, inv_path);
    if (det->parsed()) return cmd_det(opt, det_path);
    if (obs->parsed()) {
      if (obs_link.empty() && !obs_det)
        throw std::runtime_error("obstruct needs --link or --det");
      return cmd_obstruct(opt, obs_tangle, obs_link, obs_det);
    }
    if (re->parsed()) return cmd_realize(opt, re_p, re_q, re_emit);
    if (color->parsed()) return cmd_color(opt, color_path, color_mod, color_same);
    if (table->parsed()) return cmd_table(opt, table_path);
  } catch (const std::exception& e) {
    std::cerr << "tanglegcd: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
