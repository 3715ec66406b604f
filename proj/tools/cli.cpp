#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "t2/errors.hpp"
#include "t2/io.hpp"
#include "t2/models.hpp"
#include "t2/morphisms.hpp"
#include "t2/movies.hpp"
#include "t2/rewrite.hpp"
#include "t2/search.hpp"
#include "t2/two_terms.hpp"

namespace t2::cli {
namespace {

// An INPUT argument is a file when one exists under that name, inline term
// text otherwise. Something that looks like a path but cannot be opened is
// reported instead of being parsed as a term.
std::string read_input(const std::string& arg) {
  std::ifstream stream(arg);
  if (stream) {
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
  }
  bool path_like = arg.find('/') != std::string::npos || arg.ends_with(".t2") ||
                   arg.ends_with(".t2m");
  if (path_like) throw Error("cannot read " + arg);
  return arg;
}

std::string object_name(int width) {
  if (width == 0) return "I";
  if (width == 1) return "Z";
  return "Z^" + std::to_string(width);
}

void print_matrix(const Matrix& m, std::ostream& out) {
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c > 0) out << ' ';
      out << m.at(r, c).get_str();
    }
    out << '\n';
  }
}

int run_check(const std::string& input, std::ostream& out) {
  ParsedTerm term = parse_term(read_input(input));
  if (const MorTerm* f = std::get_if<MorTerm>(&term)) {
    MorType type = typecheck(*f);
    out << object_name(type.source.width) << " -> " << object_name(type.target.width) << '\n';
  } else {
    TwoType type = typecheck(std::get<TwoTerm>(term));
    out << display_boundary(type.source) << " ⇒ " << display_boundary(type.target) << '\n';
  }
  return 0;
}

int run_normalize(const std::string& input, std::ostream& out) {
  ParsedTerm term = parse_term(read_input(input));
  if (const MorTerm* f = std::get_if<MorTerm>(&term)) {
    out << serialize(normalize(*f)) << '\n';
    return 0;
  }
  Movie movie = normalize(std::get<TwoTerm>(term));
  out << serialize(movie) << '\n' << movie_listing(movie);
  return 0;
}

int run_eq(const std::string& a_input, const std::string& b_input, int depth, std::ostream& out) {
  ParsedTerm a = parse_term(read_input(a_input));
  ParsedTerm b = parse_term(read_input(b_input));
  if (a.index() != b.index()) throw Error("eq needs two terms of the same level");
  if (const MorTerm* f = std::get_if<MorTerm>(&a)) {
    if (normalize(*f) == normalize(std::get<MorTerm>(b))) {
      out << "equal\n";
      return 0;
    }
    out << "different\n";
    return 3;
  }
  SearchResult result = equivalent_bounded(std::get<TwoTerm>(a), std::get<TwoTerm>(b), depth);
  if (result.verdict != Verdict::Equal) {
    out << "unknown at depth " << depth << '\n';
    return 3;
  }
  out << "equal in " << result.path.size() << (result.path.size() == 1 ? " step" : " steps")
      << '\n';
  for (size_t i = 0; i < result.path.size(); ++i) {
    const RewriteStep& step = result.path[i];
    out << "  " << i + 1 << ". ";
    if (step.rule)
      out << step.rule->schema << ' ' << direction_name(step.direction);
    else
      out << "interchange";
    out << " at " << to_string(step.site) << '\n';
  }
  return 0;
}

int run_eval(const std::string& input, const std::string& model_path,
             const std::string& tolerance_text, std::ostream& out) {
  Model model = load_model_file(model_path);
  mpq_class tolerance = parse_rational(tolerance_text);
  ParsedTerm term = parse_term(read_input(input));
  if (const MorTerm* f = std::get_if<MorTerm>(&term)) {
    print_matrix(evaluate(*f, model), out);
    return 0;
  }
  Witness witness = evaluate(std::get<TwoTerm>(term), model, tolerance);
  out << (witness.pass ? "pass" : "fail") << ": max deviation " << witness.max_deviation.get_str()
      << '\n';
  if (witness.scalar) out << "scalar " << witness.scalar->get_str() << '\n';
  return witness.pass ? 0 : 3;
}

int run_verify_model(const std::string& model_path, unsigned seed, bool json,
                     const std::string& tolerance_text, std::ostream& out) {
  Model model = load_model_file(model_path);
  mpq_class tolerance = parse_rational(tolerance_text);
  Report report = verify_model(model, sample_catalog(seed), tolerance);
  if (json) {
    out << export_report_json(report) << '\n';
  } else {
    for (const ReportEntry& entry : report.entries)
      if (!entry.pass)
        out << "fail: " << entry.schema << " (instance " << entry.index << ", max deviation "
            << entry.max_deviation.get_str() << ")\n";
    out << report.passed << " passed, " << report.failed << " failed\n";
  }
  return report.failed == 0 ? 0 : 3;
}

int run_render(const std::string& input, bool svg, std::ostream& out) {
  ParsedTerm term = parse_term(read_input(input));
  const MorTerm* f = std::get_if<MorTerm>(&term);
  if (!f) throw Error("render draws 1-cell diagrams, not 2-cells");
  MorNormal normal = normalize(*f);
  out << (svg ? render_svg(normal) : render_ascii(normal));
  return 0;
}

// The elementary cells movies are stacked from: every generator 2-cell over
// bare strand generators, plus each one reversed. Horizontal padding comes
// from whiskering, so arguments here stay unpadded.
std::vector<TwoTerm> cell_menu() {
  const MorGen gens[] = {MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg};
  std::vector<TwoTerm> cells;
  for (MorGen f : gens)
    for (MorGen g : gens)
      cells.push_back(TwoTerm::tensorator(MorTerm::generator(f), MorTerm::generator(g)));
  for (MorGen g : gens) cells.push_back(TwoTerm::braid_zf(MorTerm::generator(g)));
  for (MorGen f : gens) cells.push_back(TwoTerm::braid_fz(MorTerm::generator(f)));
  for (MorGen f : gens) cells.push_back(TwoTerm::unit(MorTerm::generator(f)));
  cells.push_back(TwoTerm::triangulator());
  cells.push_back(TwoTerm::writhing());
  size_t direct = cells.size();
  for (size_t i = 0; i < direct; ++i) cells.push_back(TwoTerm::dual(cells[i]));
  return cells;
}

int widest_point(const MorNormal& frame) {
  int widest = frame.source_width;
  for (const Slice& slice : frame.slices) widest = std::max(widest, slice.target_width());
  return widest;
}

int widest_point(const Movie& movie) {
  int widest = 0;
  for (const MorNormal& frame : frames(movie)) widest = std::max(widest, widest_point(frame));
  return widest;
}

// Every one-sheet movie within the width bound: each menu cell under all
// paddings that keep the widest frame point inside `max_width`.
std::vector<Movie> whiskered_singles(int max_width) {
  std::vector<Movie> singles;
  for (const TwoTerm& cell : cell_menu()) {
    int widest = widest_point(normalize(cell));
    for (int left = 0; left + widest <= max_width; ++left)
      for (int right = 0; left + widest + right <= max_width; ++right)
        singles.push_back(normalize(TwoTerm::whisker(left, cell, right)));
  }
  return singles;
}

int run_enumerate(int sheets, int max_width, std::ostream& out) {
  std::vector<Movie> singles = whiskered_singles(max_width);
  std::set<Movie> seen;
  long count = 0;
  auto emit = [&](Movie movie, std::vector<Movie>& level) {
    if (!seen.insert(movie).second) return;
    out << serialize(movie) << '\n';
    ++count;
    level.push_back(std::move(movie));
  };

  std::vector<Movie> current;
  for (const Movie& single : singles) emit(single, current);
  for (int level = 2; level <= sheets; ++level) {
    std::vector<Movie> grown;
    for (const Movie& acc : current) {
      MorNormal target = target_of(acc);
      for (const Movie& single : singles) {
        if (single.source != target) continue;
        Movie stacked = acc;
        stacked.sheets.insert(stacked.sheets.end(), single.sheets.begin(), single.sheets.end());
        emit(std::move(stacked), grown);
      }
    }
    current = std::move(grown);
  }
  out << "count: " << count << '\n';
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for strand diagrams and their movies"};
  app.name("t2");
  app.require_subcommand(1);

  std::string check_input;
  CLI::App* check = app.add_subcommand("check", "typecheck a term and print its boundary");
  check->add_option("input", check_input, "term text, or a file holding one")->required();

  std::string normalize_input;
  CLI::App* normalize_cmd = app.add_subcommand("normalize", "print a term's normal form");
  normalize_cmd->add_option("input", normalize_input, "term text, or a file holding one")
      ->required();

  std::string eq_a;
  std::string eq_b;
  int eq_depth = 4;
  CLI::App* eq = app.add_subcommand("eq", "search for a rewrite chain joining two terms");
  eq->add_option("a", eq_a, "first term")->required();
  eq->add_option("b", eq_b, "second term")->required();
  eq->add_option("--depth", eq_depth, "rewrite depth bound")->check(CLI::NonNegativeNumber);

  std::string eval_input;
  std::string eval_model;
  std::string eval_tolerance = "0";
  CLI::App* eval = app.add_subcommand("eval", "evaluate a term in a linear model");
  eval->add_option("input", eval_input, "term text, or a file holding one")->required();
  eval->add_option("--model", eval_model, "model file")->required();
  eval->add_option("--tolerance", eval_tolerance, "allowed entrywise deviation for 2-cells");

  std::string vm_model;
  std::string vm_tolerance = "0";
  unsigned vm_seed = 0;
  bool vm_json = false;
  CLI::App* verify = app.add_subcommand("verify-model", "run sampled relations in a model");
  verify->add_option("model", vm_model, "model file")->required();
  verify->add_option("--seed", vm_seed, "sampling seed");
  verify->add_option("--tolerance", vm_tolerance, "allowed entrywise deviation");
  verify->add_flag("--json", vm_json, "emit the report as JSON");

  std::string render_input;
  bool render_as_svg = false;
  CLI::App* render = app.add_subcommand("render", "draw a 1-cell diagram");
  render->add_option("input", render_input, "term text, or a file holding one")->required();
  render->add_flag("--svg", render_as_svg, "emit SVG instead of text bands");

  int enum_sheets = 1;
  int enum_width = 4;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stream stacked generator movies up to a sheet count");
  enumerate->add_option("--sheets", enum_sheets, "largest sheet count to reach")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--max-width", enum_width, "widest allowed frame point")
      ->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (const char* extra = std::getenv("T2_CATALOG"); extra && *extra) load_catalog_file(extra);
    if (*check) return run_check(check_input, out);
    if (*normalize_cmd) return run_normalize(normalize_input, out);
    if (*eq) return run_eq(eq_a, eq_b, eq_depth, out);
    if (*eval) return run_eval(eval_input, eval_model, eval_tolerance, out);
    if (*verify) return run_verify_model(vm_model, vm_seed, vm_json, vm_tolerance, out);
    if (*render) return run_render(render_input, render_as_svg, out);
    if (*enumerate) return run_enumerate(enum_sheets, enum_width, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace t2::cli
