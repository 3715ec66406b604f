#include <string>
#include <variant>

#include "t2/io.hpp"

namespace t2 {
namespace {

struct MorPrinter {
  std::string operator()(const MorIdentity& n) const {
    return "id(" + std::to_string(n.object.width) + ")";
  }
  std::string operator()(const MorGenerator& n) const { return gen_name(n.gen); }
  std::string operator()(const MorWhisker& n) const {
    return "w(" + std::to_string(n.left) + "," + serialize(n.body) + "," +
           std::to_string(n.right) + ")";
  }
  std::string operator()(const MorCompose& n) const {
    return serialize(n.first) + " ; " + serialize(n.second);
  }
};

struct TwoPrinter {
  std::string operator()(const TwoIdentity& n) const { return "id2(" + serialize(n.f) + ")"; }
  std::string operator()(const TwoTensorator& n) const {
    return "tens(" + serialize(n.f) + "," + serialize(n.g) + ")";
  }
  std::string operator()(const TwoBraidZf& n) const { return "rzf(" + serialize(n.g) + ")"; }
  std::string operator()(const TwoBraidFz& n) const { return "rfz(" + serialize(n.f) + ")"; }
  std::string operator()(const TwoUnit& n) const { return "i(" + serialize(n.f) + ")"; }
  std::string operator()(const TwoTriangulator&) const { return "T"; }
  std::string operator()(const TwoWrithing&) const { return "W"; }
  std::string operator()(const TwoWhisker& n) const {
    return "w2(" + std::to_string(n.left) + "," + serialize(n.body) + "," +
           std::to_string(n.right) + ")";
  }
  std::string operator()(const TwoVertical& n) const {
    return "v(" + serialize(n.first) + "," + serialize(n.second) + ")";
  }
  std::string operator()(const TwoHorizontal& n) const {
    return "h(" + serialize(n.first) + "," + serialize(n.second) + ")";
  }
  std::string operator()(const TwoDual& n) const { return "dual(" + serialize(n.body) + ")"; }
};

}  // namespace

std::string serialize(const MorTerm& term) { return std::visit(MorPrinter{}, term.node().v); }

std::string serialize(const TwoTerm& term) { return std::visit(TwoPrinter{}, term.node().v); }

std::string serialize(const MorNormal& normal) { return serialize(term_of(normal)); }

std::string serialize(const Movie& movie) { return serialize(term_of(movie)); }

std::string display_boundary(const MorNormal& normal) {
  if (normal.slices.empty()) {
    if (normal.source_width == 0) return "1_I";
    if (normal.source_width == 1) return "1_Z";
    return "1_Z^" + std::to_string(normal.source_width);
  }
  return serialize(normal);
}

std::string movie_listing(const Movie& movie) {
  std::string out = "source " + to_string(movie.source) + "\n";
  for (size_t i = 0; i < movie.sheets.size(); ++i) {
    const Sheet& sheet = movie.sheets[i];
    out += "sheet " + std::to_string(i) + ": " + kind_name(sheet.cell.kind);
    if (sheet.cell.f)
      out += " f=(" + std::to_string(sheet.cell.f->left) + " " + gen_name(sheet.cell.f->gen) +
             " " + std::to_string(sheet.cell.f->right) + ")";
    if (sheet.cell.g)
      out += " g=(" + std::to_string(sheet.cell.g->left) + " " + gen_name(sheet.cell.g->gen) +
             " " + std::to_string(sheet.cell.g->right) + ")";
    if (sheet.flipped) out += " flipped";
    out += " at depth " + std::to_string(sheet.depth) + ", strands " +
           std::to_string(sheet.left) + "+" + std::to_string(sheet.right) + "\n";
  }
  return out;
}

}  // namespace t2
