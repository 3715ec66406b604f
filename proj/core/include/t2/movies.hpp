#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "t2/morphisms.hpp"
#include "t2/two_terms.hpp"

namespace t2 {

// Basic 2-cells a movie is built from. Identities never appear: they
// normalize to the absence of a sheet.
enum class CellKind {
  tensorator,
  braid_zf,
  braid_fz,
  unit,
  triangulator,
  writhing,
};

const char* kind_name(CellKind kind);

// A generator 2-cell with single-slice arguments. `f` is the first argument
// (tensorator, braid_fz, unit), `g` the second (tensorator, braid_zf); unused
// arguments stay empty. Unit cells carry a bare generator slice, with any
// padding hoisted out to the surrounding sheet.
struct Cell {
  CellKind kind = CellKind::triangulator;
  std::optional<Slice> f;
  std::optional<Slice> g;

  auto operator<=>(const Cell&) const = default;
};

// The cell as a 2-cell term, ignoring padding and orientation.
TwoTerm term_of(const Cell& cell);

// Boundary blocks of the bare cell: source and target slice chains between
// the same pair of widths.
TwoType cell_type(const Cell& cell);

// One step of a movie: `cell` applied `depth` slices into the current frame,
// padded by `left` and `right` strands. A flipped sheet runs the cell from
// its target block back to its source block.
struct Sheet {
  int depth = 0;
  int left = 0;
  int right = 0;
  Cell cell;
  bool flipped = false;

  auto operator<=>(const Sheet&) const = default;
};

// The slice blocks a sheet consumes and produces, in frame coordinates
// (padding and orientation applied).
struct SheetBlocks {
  std::vector<Slice> source;
  std::vector<Slice> target;
};

SheetBlocks sheet_blocks(const Sheet& sheet);

// Normal form of a 2-cell: the source 1-cell followed by a sheet per
// generator occurrence. Equality of movies is the strict-law equality of
// 2-cells.
struct Movie {
  MorNormal source;
  std::vector<Sheet> sheets;

  auto operator<=>(const Movie&) const = default;
};

// All 1-cell frames the movie passes through, starting at `source`; one more
// frame than there are sheets. Throws Ill2TypedError when a sheet does not
// match its frame.
std::vector<MorNormal> frames(const Movie& movie);

// Final frame only.
MorNormal target_of(const Movie& movie);

// Flattens a 2-cell term to its movie. Quotients exactly the strict laws:
// associativity and units of both compositions, whisker distribution, and
// the fixed left-then-right expansion of horizontal composites.
Movie normalize(const TwoTerm& term);

// Reads a movie back as a 2-cell term, one vertical layer per sheet.
TwoTerm term_of(const Movie& movie);

// Reversal, playing the movie backwards.
Movie dual(const Movie& movie);

// Strict-law equality of 2-cell terms via movie normal forms.
bool equal(const TwoTerm& a, const TwoTerm& b);

}  // namespace t2
