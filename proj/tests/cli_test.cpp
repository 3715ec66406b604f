#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "t2/io.hpp"
#include "t2/morphisms.hpp"
#include "t2/movies.hpp"
#include "t2/two_terms.hpp"

namespace {

using namespace t2;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome drive(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(T2_FIXTURE_DIR "/") + name; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) lines.push_back(line);
  return lines;
}

TEST(Check, PrintsBoundaries) {
  Outcome cap = drive({"check", "cap"});
  EXPECT_EQ(cap.code, 0);
  EXPECT_EQ(cap.out, "I -> Z^2\n");

  EXPECT_EQ(drive({"check", "id(0)"}).out, "I -> I\n");
  EXPECT_EQ(drive({"check", "w(1,pos,0) ; w(0,pos,1)"}).out, "Z^3 -> Z^3\n");

  Outcome sphere = drive({"check", fixture("sphere.t2")});
  EXPECT_EQ(sphere.code, 0);
  EXPECT_EQ(sphere.out, "1_I ⇒ 1_I\n");

  EXPECT_EQ(drive({"check", "i(cap)"}).out, "1_I ⇒ cap ; cup\n");
}

TEST(Check, ReportsErrors) {
  Outcome dangling = drive({"check", "cap ;"});
  EXPECT_EQ(dangling.code, 2);
  EXPECT_NE(dangling.err.find("parse error at 1:6"), std::string::npos);

  Outcome mismatch = drive({"check", "cap ; w(1,pos,0)"});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.err.find("width mismatch"), std::string::npos);

  Outcome missing = drive({"check", "no/such/file.t2"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
}

TEST(Usage, ExitCodeOne) {
  EXPECT_EQ(drive({}).code, 1);
  EXPECT_EQ(drive({"bogus"}).code, 1);
  EXPECT_EQ(drive({"check"}).code, 1);
  EXPECT_EQ(drive({"eval", "cap"}).code, 1);
  EXPECT_EQ(drive({"enumerate", "--sheets", "0"}).code, 1);
  EXPECT_EQ(drive({"eq", "T", "T", "--depth", "-1"}).code, 1);

  Outcome help = drive({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("SUBCOMMAND"), std::string::npos);
}

TEST(Normalize, CanonicalForms) {
  Outcome snake = drive({"normalize", "w(0,cap,1) ; w(1,cup,0) ; id(1)"});
  EXPECT_EQ(snake.code, 0);
  EXPECT_EQ(snake.out, "w(0,cap,1) ; w(1,cup,0)\n");

  EXPECT_EQ(drive({"normalize", "id(2)"}).out, "id(2)\n");

  Outcome cusp = drive({"normalize", "w2(1,T,0)"});
  EXPECT_EQ(cusp.code, 0);
  EXPECT_EQ(cusp.out,
            "h(h(id2(id(2)),w2(1,T,0)),id2(id(2)))\n"
            "source [2->2: (1 cap 1) (2 cup 0)]\n"
            "sheet 0: triangulator at depth 0, strands 1+0\n");
}

TEST(Eq, DecidesMorphismsByNormalForm) {
  Outcome same = drive({"eq", "cap ; cup", "cap ; cup"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out, "equal\n");

  Outcome differ = drive({"eq", "pos", "neg"});
  EXPECT_EQ(differ.code, 3);
  EXPECT_EQ(differ.out, "different\n");
}

TEST(Eq, SearchesTwoCellsAndPrintsPaths) {
  Outcome zigzag = drive({"eq", fixture("zig_lhs.t2"), fixture("zig_rhs.t2"), "--depth", "1"});
  EXPECT_EQ(zigzag.code, 0);
  std::vector<std::string> lines = lines_of(zigzag.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "equal in 1 step");
  EXPECT_NE(lines[1].find("zigzag-2cell L2R"), std::string::npos);

  EXPECT_EQ(drive({"eq", "T", "T"}).out, "equal in 0 steps\n");

  Outcome mixed = drive({"eq", "cap", "T"});
  EXPECT_EQ(mixed.code, 2);

  Outcome skew = drive({"eq", "T", "W"});
  EXPECT_EQ(skew.code, 2);
  EXPECT_NE(skew.err.find("not parallel"), std::string::npos);
}

TEST(Eq, ReplaysWithinTheDepthBound) {
  std::string doubled = "v(v(W,dual(W)),v(W,dual(W)))";
  Outcome deep = drive({"eq", doubled, "id2(cap)", "--depth", "2"});
  EXPECT_EQ(deep.code, 0);
  EXPECT_NE(deep.out.find("equal in 2 steps"), std::string::npos);
  EXPECT_NE(deep.out.find("W-unitary"), std::string::npos);
}

TEST(Eval, PrintsMatricesForMorphisms) {
  Outcome circle = drive({"eval", "cap ; cup", "--model", fixture("dim2.t2m")});
  EXPECT_EQ(circle.code, 0);
  EXPECT_EQ(circle.out, "2\n");

  Outcome crossing = drive({"eval", "pos", "--model", fixture("dim2.t2m")});
  EXPECT_EQ(crossing.out,
            "1 0 0 0\n"
            "0 0 1 0\n"
            "0 1 0 0\n"
            "0 0 0 1\n");

  EXPECT_EQ(drive({"eval", "cap", "--model", fixture("dim2.t2m")}).out, "1\n0\n0\n1\n");
  EXPECT_EQ(drive({"eval", "id(0)", "--model", fixture("dim3.t2m")}).out, "1\n");
}

TEST(Eval, WitnessesTwoCells) {
  Outcome sphere = drive({"eval", fixture("sphere.t2"), "--model", fixture("dim2.t2m")});
  EXPECT_EQ(sphere.code, 0);
  EXPECT_EQ(sphere.out, "pass: max deviation 0\nscalar 1\n");

  Outcome writhe = drive({"eval", "W", "--model", fixture("bad_form.t2m")});
  EXPECT_EQ(writhe.code, 3);
  EXPECT_EQ(writhe.out, "fail: max deviation 1\n");

  Outcome slack = drive({"eval", "W", "--model", fixture("bad_form.t2m"), "--tolerance", "2"});
  EXPECT_EQ(slack.code, 0);
  EXPECT_EQ(slack.out, "pass: max deviation 1\n");
}

TEST(Eval, RejectsSingularModels) {
  std::string path = ::testing::TempDir() + "/t2_cli_singular.t2m";
  std::ofstream(path) << "dim 2\nform 1 1\nform 1 1\n";
  Outcome singular = drive({"eval", "cap", "--model", path});
  EXPECT_EQ(singular.code, 2);
  EXPECT_NE(singular.err.find("singular"), std::string::npos);
}

TEST(VerifyModel, PassesSymmetricFormsAndFlagsTheShear) {
  Outcome good = drive({"verify-model", fixture("dim2.t2m")});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.out.find("fail:"), std::string::npos);
  EXPECT_NE(good.out.find(" passed, 0 failed\n"), std::string::npos);

  Outcome bad = drive({"verify-model", fixture("bad_form.t2m")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("fail: writhing-equation (instance"), std::string::npos);
}

TEST(VerifyModel, JsonIsStableAcrossRuns) {
  std::vector<std::string> args = {"verify-model", fixture("dim2.t2m"), "--json", "--seed", "5"};
  Outcome first = drive(args);
  Outcome second = drive(args);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out.rfind("{\"schema\":\"t2/1\",\"entries\":[{\"id\":0,", 0), 0u);
  EXPECT_NE(first.out.find("\"summary\":{\"pass\":"), std::string::npos);
}

TEST(Render, TextAndSvg) {
  EXPECT_EQ(drive({"render", "cap ; pos ; cup"}).out, "/\\\nX\n\\/\n");
  EXPECT_EQ(drive({"render", "id(2)"}).out, "| |\n");

  Outcome svg = drive({"render", "cap", "--svg"});
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"40\" "
            "stroke=\"black\" fill=\"none\">\n"
            "<path d=\"M 20 40 Q 40 0 60 40\"/>\n"
            "</svg>\n");

  Outcome flat = drive({"render", "T"});
  EXPECT_EQ(flat.code, 2);
  EXPECT_NE(flat.err.find("1-cell"), std::string::npos);
}

// The same generator cells the tool stacks: every generator 2-cell over bare
// strand generators, and each one reversed.
std::vector<TwoTerm> generator_cells() {
  const MorGen gens[] = {MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg};
  auto strand = [](MorGen g) { return MorTerm::generator(g); };
  std::vector<TwoTerm> cells;
  for (MorGen f : gens)
    for (MorGen g : gens) cells.push_back(TwoTerm::tensorator(strand(f), strand(g)));
  for (MorGen g : gens) cells.push_back(TwoTerm::braid_zf(strand(g)));
  for (MorGen f : gens) cells.push_back(TwoTerm::braid_fz(strand(f)));
  for (MorGen f : gens) cells.push_back(TwoTerm::unit(strand(f)));
  cells.push_back(TwoTerm::triangulator());
  cells.push_back(TwoTerm::writhing());
  size_t direct = cells.size();
  for (size_t i = 0; i < direct; ++i) cells.push_back(TwoTerm::dual(cells[i]));
  return cells;
}

int widest_point_of(const Movie& movie) {
  int widest = 0;
  for (const MorNormal& frame : frames(movie)) {
    widest = std::max(widest, frame.source_width);
    for (const Slice& slice : frame.slices) widest = std::max(widest, slice.target_width());
  }
  return widest;
}

TEST(Enumerate, MatchesTheDirectPairLoop) {
  const int max_width = 3;
  Outcome run = drive({"enumerate", "--sheets", "2", "--max-width", "3"});
  ASSERT_EQ(run.code, 0);
  std::vector<std::string> lines = lines_of(run.out);
  ASSERT_FALSE(lines.empty());
  ASSERT_EQ(lines.back().rfind("count: ", 0), 0u);
  long reported = std::stol(lines.back().substr(7));
  EXPECT_EQ(reported, static_cast<long>(lines.size()) - 1);

  // Tool output, read back through the parser.
  std::set<Movie> streamed;
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    ParsedTerm term = parse_term(lines[i]);
    streamed.insert(normalize(std::get<TwoTerm>(term)));
  }
  EXPECT_EQ(static_cast<long>(streamed.size()), reported);

  // Direct nested loop over (generator x whisker positions)^2, deduplicated
  // by normal form, filtering on the widest frame point afterwards.
  std::vector<TwoTerm> padded;
  std::set<Movie> expected;
  for (const TwoTerm& cell : generator_cells())
    for (int left = 0; left <= max_width; ++left)
      for (int right = 0; right <= max_width; ++right) {
        TwoTerm whiskered = TwoTerm::whisker(left, cell, right);
        Movie movie = normalize(whiskered);
        if (widest_point_of(movie) > max_width) continue;
        padded.push_back(whiskered);
        expected.insert(std::move(movie));
      }
  for (const TwoTerm& a : padded)
    for (const TwoTerm& b : padded) {
      try {
        expected.insert(normalize(TwoTerm::vertical(a, b)));
      } catch (const Ill2TypedError&) {
      }
    }
  EXPECT_EQ(streamed, expected);
}

TEST(Enumerate, IsDeterministic) {
  Outcome first = drive({"enumerate", "--sheets", "2"});
  Outcome second = drive({"enumerate", "--sheets", "2"});
  EXPECT_EQ(first.out, second.out);

  Outcome narrow = drive({"enumerate", "--sheets", "1", "--max-width", "2"});
  std::vector<std::string> lines = lines_of(narrow.out);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines.back(), "count: 10");
  EXPECT_EQ(std::set<std::string>(lines.begin(), lines.end()).size(), lines.size());
}

// Keep this last: loading a catalog file mutates the process-wide schema
// registry, and the extra rule would change eq verdicts in tests above.
TEST(CatalogEnv, LoadsExtraSchemasForTheRun) {
  std::string doubled = "v(v(W,dual(W)),v(W,dual(W)))";
  Outcome before = drive({"eq", doubled, "id2(cap)", "--depth", "1"});
  EXPECT_EQ(before.code, 3);
  EXPECT_EQ(before.out, "unknown at depth 1\n");

  ::setenv("T2_CATALOG", fixture("extra_rules.t2c").c_str(), 1);
  Outcome with = drive({"eq", doubled, "id2(cap)", "--depth", "1"});
  EXPECT_EQ(with.code, 0);
  EXPECT_NE(with.out.find("equal in 1 step"), std::string::npos);
  EXPECT_NE(with.out.find("double-loop-pair"), std::string::npos);

  ::setenv("T2_CATALOG", "no/such/catalog.t2c", 1);
  Outcome broken = drive({"check", "cap"});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("cannot read"), std::string::npos);
  ::unsetenv("T2_CATALOG");
}

}  // namespace
