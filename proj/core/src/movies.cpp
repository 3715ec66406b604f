#include "t2/movies.hpp"

#include <algorithm>
#include <utility>
#include <variant>

#include "t2/errors.hpp"

namespace t2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

MorTerm slice_term(const Slice& s) { return term_of(MorNormal{s.source_width(), {s}}); }

std::vector<Slice> shifted(const std::vector<Slice>& slices, int left, int right) {
  std::vector<Slice> out;
  out.reserve(slices.size());
  for (const Slice& s : slices) out.push_back({s.left + left, s.gen, s.right + right});
  return out;
}

int width_at(const MorNormal& n, std::size_t depth) {
  return depth == 0 ? n.source_width : n.slices[depth - 1].target_width();
}

}  // namespace

const char* kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::tensorator: return "tensorator";
    case CellKind::braid_zf: return "braid_zf";
    case CellKind::braid_fz: return "braid_fz";
    case CellKind::unit: return "unit";
    case CellKind::triangulator: return "triangulator";
    case CellKind::writhing: return "writhing";
  }
  return "?";
}

TwoTerm term_of(const Cell& cell) {
  switch (cell.kind) {
    case CellKind::tensorator: return TwoTerm::tensorator(slice_term(*cell.f), slice_term(*cell.g));
    case CellKind::braid_zf: return TwoTerm::braid_zf(slice_term(*cell.g));
    case CellKind::braid_fz: return TwoTerm::braid_fz(slice_term(*cell.f));
    case CellKind::unit: return TwoTerm::unit(slice_term(*cell.f));
    case CellKind::triangulator: return TwoTerm::triangulator();
    case CellKind::writhing: return TwoTerm::writhing();
  }
  return TwoTerm::triangulator();
}

TwoType cell_type(const Cell& cell) { return typecheck(term_of(cell)); }

SheetBlocks sheet_blocks(const Sheet& sheet) {
  TwoType ty = cell_type(sheet.cell);
  if (sheet.flipped) std::swap(ty.source, ty.target);
  return {shifted(ty.source.slices, sheet.left, sheet.right),
          shifted(ty.target.slices, sheet.left, sheet.right)};
}

namespace {

// Entry width of the (padded) cell, for validating insertion sheets whose
// source block has no slices of its own.
int sheet_entry_width(const Sheet& sheet) {
  return sheet.left + cell_type(sheet.cell).source.source_width + sheet.right;
}

void apply_sheet(MorNormal& frame, const Sheet& sheet, int index) {
  auto fail = [&](const std::string& reason) {
    throw Ill2TypedError("sheet " + std::to_string(index), reason);
  };
  SheetBlocks blocks = sheet_blocks(sheet);
  if (sheet.depth < 0) fail("negative depth");
  std::size_t d = static_cast<std::size_t>(sheet.depth);
  if (d + blocks.source.size() > frame.slices.size()) fail("block reaches past the frame");
  if (width_at(frame, d) != sheet_entry_width(sheet))
    fail("cell of width " + std::to_string(sheet_entry_width(sheet)) + " placed at width " +
         std::to_string(width_at(frame, d)));
  for (std::size_t j = 0; j < blocks.source.size(); ++j)
    if (frame.slices[d + j] != blocks.source[j])
      fail("block does not match frame " + to_string(frame));
  std::vector<Slice> next;
  next.reserve(frame.slices.size() - blocks.source.size() + blocks.target.size());
  next.insert(next.end(), frame.slices.begin(), frame.slices.begin() + static_cast<long>(d));
  next.insert(next.end(), blocks.target.begin(), blocks.target.end());
  next.insert(next.end(), frame.slices.begin() + static_cast<long>(d + blocks.source.size()),
              frame.slices.end());
  frame.slices = std::move(next);
}

}  // namespace

std::vector<MorNormal> frames(const Movie& movie) {
  std::vector<MorNormal> out{movie.source};
  for (std::size_t i = 0; i < movie.sheets.size(); ++i) {
    MorNormal next = out.back();
    apply_sheet(next, movie.sheets[i], static_cast<int>(i));
    out.push_back(std::move(next));
  }
  return out;
}

MorNormal target_of(const Movie& movie) {
  MorNormal frame = movie.source;
  for (std::size_t i = 0; i < movie.sheets.size(); ++i)
    apply_sheet(frame, movie.sheets[i], static_cast<int>(i));
  return frame;
}

namespace {

// Normalization builds movies bottom-up, carrying the final frame along so
// stacking never replays sheets.
struct Build {
  Movie movie;
  MorNormal target;
};

Build ident(MorNormal n) { return {Movie{n, {}}, n}; }

Build from_sheet(Cell cell) {
  TwoType ty = cell_type(cell);
  Movie m{std::move(ty.source), {Sheet{0, 0, 0, std::move(cell), false}}};
  return {std::move(m), std::move(ty.target)};
}

Build vstack(Build a, Build b) {
  if (a.target != b.movie.source)
    throw Ill2TypedError("vertical", "target " + to_string(a.target) + " does not match source " +
                                         to_string(b.movie.source));
  a.movie.sheets.insert(a.movie.sheets.end(), b.movie.sheets.begin(), b.movie.sheets.end());
  return {std::move(a.movie), std::move(b.target)};
}

Build hstack(Build a, Build b) {
  if (a.movie.source.target_width() != b.movie.source.source_width)
    throw Ill2TypedError("horizontal",
                         "boundaries end at " + to_string(Object{a.movie.source.target_width()}) +
                             " but continue from " +
                             to_string(Object{b.movie.source.source_width}));
  // Left side plays first above the untouched source of the right side, then
  // the right side plays below the finished target of the left.
  int shift = static_cast<int>(a.target.slices.size());
  Movie m{std::move(a.movie.source), std::move(a.movie.sheets)};
  m.source.slices.insert(m.source.slices.end(), b.movie.source.slices.begin(),
                         b.movie.source.slices.end());
  for (Sheet s : b.movie.sheets) {
    s.depth += shift;
    m.sheets.push_back(std::move(s));
  }
  MorNormal tgt = std::move(a.target);
  tgt.slices.insert(tgt.slices.end(), b.target.slices.begin(), b.target.slices.end());
  return {std::move(m), std::move(tgt)};
}

Build whiskered(int left, Build b, int right) {
  Movie m{MorNormal{left + b.movie.source.source_width + right,
                    shifted(b.movie.source.slices, left, right)},
          std::move(b.movie.sheets)};
  for (Sheet& s : m.sheets) {
    s.left += left;
    s.right += right;
  }
  MorNormal tgt{m.source.source_width, shifted(b.target.slices, left, right)};
  return {std::move(m), std::move(tgt)};
}

Build reversed(Build b) {
  std::reverse(b.movie.sheets.begin(), b.movie.sheets.end());
  for (Sheet& s : b.movie.sheets) s.flipped = !s.flipped;
  return {Movie{std::move(b.target), std::move(b.movie.sheets)}, std::move(b.movie.source)};
}

MorNormal sub_normal(const MorNormal& n, std::size_t from, std::size_t to) {
  MorNormal out{width_at(n, from), {}};
  out.slices.assign(n.slices.begin() + static_cast<long>(from),
                    n.slices.begin() + static_cast<long>(to));
  return out;
}

// Tensorator on normalized arguments, peeling the first argument down to one
// slice before the second.
Build norm_tensorator(const MorNormal& f, const MorNormal& g) {
  int a = f.source_width, a2 = f.target_width();
  int b = g.source_width, b2 = g.target_width();
  if (f.slices.empty() || g.slices.empty()) {
    MorNormal src{a + b, shifted(g.slices, a, 0)};
    std::vector<Slice> tail = shifted(f.slices, 0, b2);
    src.slices.insert(src.slices.end(), tail.begin(), tail.end());
    return ident(std::move(src));
  }
  if (f.slices.size() > 1) {
    MorNormal f1 = sub_normal(f, 0, 1);
    MorNormal f2 = sub_normal(f, 1, f.slices.size());
    return vstack(hstack(norm_tensorator(f1, g), ident(MorNormal{f1.target_width() + b2,
                                                                 shifted(f2.slices, 0, b2)})),
                  hstack(ident(MorNormal{a + b, shifted(f1.slices, 0, b)}),
                         norm_tensorator(f2, g)));
  }
  if (g.slices.size() > 1) {
    MorNormal g1 = sub_normal(g, 0, 1);
    MorNormal g2 = sub_normal(g, 1, g.slices.size());
    return vstack(hstack(ident(MorNormal{a + b, shifted(g1.slices, a, 0)}),
                         norm_tensorator(f, g2)),
                  hstack(norm_tensorator(f, g1), ident(MorNormal{a2 + g1.target_width(),
                                                                 shifted(g2.slices, a2, 0)})));
  }
  return from_sheet(Cell{CellKind::tensorator, f.slices[0], g.slices[0]});
}

// Braiding of the strand over g, peeling the first slice of g.
Build norm_braid_zf(const MorNormal& g) {
  if (g.slices.empty()) return ident(normalize(braiding(1, g.source_width)));
  if (g.slices.size() > 1) {
    MorNormal g1 = sub_normal(g, 0, 1);
    MorNormal g2 = sub_normal(g, 1, g.slices.size());
    return vstack(
        hstack(ident(MorNormal{1 + g.source_width, shifted(g1.slices, 1, 0)}), norm_braid_zf(g2)),
        hstack(norm_braid_zf(g1),
               ident(MorNormal{g1.target_width() + 1, shifted(g2.slices, 0, 1)})));
  }
  return from_sheet(Cell{CellKind::braid_zf, std::nullopt, g.slices[0]});
}

// Braiding of f over the strand, peeling the first slice of f.
Build norm_braid_fz(const MorNormal& f) {
  if (f.slices.empty()) return ident(normalize(braiding(f.source_width, 1)));
  if (f.slices.size() > 1) {
    MorNormal f1 = sub_normal(f, 0, 1);
    MorNormal f2 = sub_normal(f, 1, f.slices.size());
    return vstack(
        hstack(ident(MorNormal{f.source_width + 1, shifted(f1.slices, 0, 1)}), norm_braid_fz(f2)),
        hstack(norm_braid_fz(f1),
               ident(MorNormal{1 + f1.target_width(), shifted(f2.slices, 1, 0)})));
  }
  return from_sheet(Cell{CellKind::braid_fz, f.slices[0], std::nullopt});
}

// Unit on f, one sheet per slice of f, nested innermost-last.
Build norm_unit(const MorNormal& f) {
  if (f.slices.empty()) return ident(MorNormal{f.source_width, {}});
  if (f.slices.size() == 1) {
    const Slice& s = f.slices[0];
    Cell cell{CellKind::unit, Slice{0, s.gen, 0}, std::nullopt};
    MorNormal tgt{s.source_width(), {s, s.dualized()}};
    Movie m{MorNormal{s.source_width(), {}}, {Sheet{0, s.left, s.right, std::move(cell), false}}};
    return {std::move(m), std::move(tgt)};
  }
  MorNormal s1 = sub_normal(f, 0, 1);
  MorNormal rest = sub_normal(f, 1, f.slices.size());
  return vstack(norm_unit(s1),
                hstack(hstack(ident(s1), norm_unit(rest)), ident(dual(s1))));
}

Build norm(const TwoTerm& term) {
  return std::visit(
      overloaded{
          [](const TwoIdentity& t) { return ident(normalize(t.f)); },
          [](const TwoTensorator& t) { return norm_tensorator(normalize(t.f), normalize(t.g)); },
          [](const TwoBraidZf& t) { return norm_braid_zf(normalize(t.g)); },
          [](const TwoBraidFz& t) { return norm_braid_fz(normalize(t.f)); },
          [](const TwoUnit& t) { return norm_unit(normalize(t.f)); },
          [](const TwoTriangulator&) {
            return from_sheet(Cell{CellKind::triangulator, std::nullopt, std::nullopt});
          },
          [](const TwoWrithing&) {
            return from_sheet(Cell{CellKind::writhing, std::nullopt, std::nullopt});
          },
          [](const TwoWhisker& t) { return whiskered(t.left, norm(t.body), t.right); },
          [](const TwoVertical& t) { return vstack(norm(t.first), norm(t.second)); },
          [](const TwoHorizontal& t) { return hstack(norm(t.first), norm(t.second)); },
          [](const TwoDual& t) { return reversed(norm(t.body)); },
      },
      term.node().v);
}

}  // namespace

Movie normalize(const TwoTerm& term) { return norm(term).movie; }

TwoTerm term_of(const Movie& movie) {
  if (movie.sheets.empty()) return TwoTerm::identity(term_of(movie.source));
  std::vector<MorNormal> fs = frames(movie);
  TwoTerm acc = TwoTerm::identity(MorTerm::identity(0));
  for (std::size_t i = 0; i < movie.sheets.size(); ++i) {
    const Sheet& sheet = movie.sheets[i];
    const MorNormal& frame = fs[i];
    std::size_t d = static_cast<std::size_t>(sheet.depth);
    std::size_t s = sheet_blocks(sheet).source.size();
    MorNormal prefix = sub_normal(frame, 0, d);
    MorNormal suffix = sub_normal(frame, d + s, frame.slices.size());
    TwoTerm cell = term_of(sheet.cell);
    if (sheet.flipped) cell = TwoTerm::dual(cell);
    TwoTerm layer = TwoTerm::horizontal(
        TwoTerm::horizontal(TwoTerm::identity(term_of(prefix)),
                            TwoTerm::whisker(sheet.left, std::move(cell), sheet.right)),
        TwoTerm::identity(term_of(suffix)));
    acc = i == 0 ? std::move(layer) : TwoTerm::vertical(std::move(acc), std::move(layer));
  }
  return acc;
}

Movie dual(const Movie& movie) {
  Movie out{target_of(movie), movie.sheets};
  std::reverse(out.sheets.begin(), out.sheets.end());
  for (Sheet& s : out.sheets) s.flipped = !s.flipped;
  return out;
}

bool equal(const TwoTerm& a, const TwoTerm& b) { return normalize(a) == normalize(b); }

}  // namespace t2
