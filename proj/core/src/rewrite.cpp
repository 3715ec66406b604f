#include "t2/rewrite.hpp"

#include <utility>

#include "t2/errors.hpp"

namespace t2 {

const char* direction_name(Direction direction) {
  return direction == Direction::L2R ? "L2R" : "R2L";
}

std::string to_string(const Site& site) {
  return "sheet " + std::to_string(site.sheet) + ", depth " + std::to_string(site.depth) +
         ", padding " + std::to_string(site.left) + "+" + std::to_string(site.right);
}

namespace {

int width_between(const MorNormal& frame, int depth) {
  return depth == 0 ? frame.source_width : frame.slices[depth - 1].target_width();
}

Sheet shifted(const Sheet& sheet, const Site& site) {
  Sheet out = sheet;
  out.depth += site.depth;
  out.left += site.left;
  out.right += site.right;
  return out;
}

// The matched side's source block must sit inside the frame at the site's
// offsets; the replacement splices into exactly this block.
bool block_matches(const MorNormal& frame, const MorNormal& block, const Site& site) {
  if (site.depth < 0 || site.left < 0 || site.right < 0) return false;
  int count = static_cast<int>(block.slices.size());
  if (site.depth + count > static_cast<int>(frame.slices.size())) return false;
  if (width_between(frame, site.depth) != site.left + block.source_width + site.right)
    return false;
  for (int i = 0; i < count; ++i) {
    const Slice& want = block.slices[i];
    Slice have = frame.slices[site.depth + i];
    if (have != Slice{want.left + site.left, want.gen, want.right + site.right}) return false;
  }
  return true;
}

bool matches_at(const Movie& movie, const std::vector<MorNormal>& movie_frames,
                const Movie& pattern, const Site& site) {
  int count = static_cast<int>(pattern.sheets.size());
  if (site.sheet < 0 || site.sheet + count > static_cast<int>(movie.sheets.size())) return false;
  for (int i = 0; i < count; ++i)
    if (movie.sheets[site.sheet + i] != shifted(pattern.sheets[i], site)) return false;
  return block_matches(movie_frames[site.sheet], pattern.source, site);
}

const Movie& side_of(const PreparedRule& rule, Direction direction, bool matched) {
  bool left = (direction == Direction::L2R) == matched;
  return left ? rule.lhs : rule.rhs;
}

}  // namespace

PreparedRule prepare(std::shared_ptr<const RelationInstance> rule) {
  Movie lhs = normalize(rule->lhs);
  Movie rhs = normalize(rule->rhs);
  return {std::move(rule), std::move(lhs), std::move(rhs)};
}

std::vector<Site> rewrite_sites(const Movie& movie, const std::vector<MorNormal>& movie_frames,
                                const PreparedRule& rule, Direction direction) {
  const Movie& pattern = side_of(rule, direction, true);
  std::vector<Site> out;
  int count = static_cast<int>(pattern.sheets.size());
  if (count > 0) {
    // Offsets are forced by the first sheet; everything else just confirms.
    for (int k = 0; k + count <= static_cast<int>(movie.sheets.size()); ++k) {
      const Sheet& have = movie.sheets[k];
      const Sheet& want = pattern.sheets[0];
      Site site{k, have.depth - want.depth, have.left - want.left, have.right - want.right};
      if (matches_at(movie, movie_frames, pattern, site)) out.push_back(site);
    }
    return out;
  }
  // A sheetless side matches a block of some frame; the site doubles as the
  // insertion point for the other side's sheets.
  const MorNormal& block = pattern.source;
  int block_size = static_cast<int>(block.slices.size());
  for (int k = 0; k <= static_cast<int>(movie.sheets.size()); ++k) {
    const MorNormal& frame = movie_frames[k];
    for (int depth = 0; depth + block_size <= static_cast<int>(frame.slices.size()); ++depth) {
      if (block_size > 0) {
        Site site{k, depth, frame.slices[depth].left - block.slices[0].left,
                  frame.slices[depth].right - block.slices[0].right};
        if (block_matches(frame, block, site)) out.push_back(site);
      } else {
        int room = width_between(frame, depth) - block.source_width;
        for (int left = 0; left <= room; ++left)
          out.push_back({k, depth, left, room - left});
      }
    }
  }
  return out;
}

std::vector<Site> rewrite_sites(const Movie& movie, const RelationInstance& rule,
                                Direction direction) {
  return rewrite_sites(movie, frames(movie),
                       prepare(std::make_shared<const RelationInstance>(rule)), direction);
}

Movie rewrite(const Movie& movie, const std::vector<MorNormal>& movie_frames,
              const PreparedRule& rule, const Site& site, Direction direction) {
  const Movie& pattern = side_of(rule, direction, true);
  if (!matches_at(movie, movie_frames, pattern, site)) throw NoMatchError(to_string(site));
  const Movie& replacement = side_of(rule, direction, false);
  Movie out;
  out.source = movie.source;
  out.sheets.reserve(movie.sheets.size() - pattern.sheets.size() + replacement.sheets.size());
  out.sheets.assign(movie.sheets.begin(), movie.sheets.begin() + site.sheet);
  for (const Sheet& sheet : replacement.sheets) out.sheets.push_back(shifted(sheet, site));
  out.sheets.insert(out.sheets.end(),
                    movie.sheets.begin() + site.sheet + pattern.sheets.size(),
                    movie.sheets.end());
  return out;
}

Movie rewrite(const Movie& movie, const RelationInstance& rule, const Site& site,
              Direction direction) {
  return rewrite(movie, frames(movie), prepare(std::make_shared<const RelationInstance>(rule)),
                 site, direction);
}

TwoTerm rewrite_step(const TwoTerm& term, const RelationInstance& rule, const Site& site,
                     Direction direction) {
  return term_of(rewrite(normalize(term), rule, site, direction));
}

bool sheets_independent(const Movie& movie, int index) {
  if (index < 0 || index + 1 >= static_cast<int>(movie.sheets.size())) return false;
  const Sheet& first = movie.sheets[index];
  const Sheet& second = movie.sheets[index + 1];
  SheetBlocks first_blocks = sheet_blocks(first);
  SheetBlocks second_blocks = sheet_blocks(second);
  // The second sheet reads the frame the first just wrote, so it must sit
  // entirely above the first's block or entirely below its output.
  bool above = second.depth + static_cast<int>(second_blocks.source.size()) <= first.depth;
  bool below = second.depth >= first.depth + static_cast<int>(first_blocks.target.size());
  return above || below;
}

std::vector<int> interchange_sites(const Movie& movie) {
  std::vector<int> out;
  for (int i = 0; i + 1 < static_cast<int>(movie.sheets.size()); ++i)
    if (sheets_independent(movie, i)) out.push_back(i);
  return out;
}

Movie interchange_swap(const Movie& movie, int index) {
  if (!sheets_independent(movie, index))
    throw NoMatchError("sheets " + std::to_string(index) + " and " + std::to_string(index + 1) +
                       " overlap");
  Sheet first = movie.sheets[index];
  Sheet second = movie.sheets[index + 1];
  SheetBlocks first_blocks = sheet_blocks(first);
  SheetBlocks second_blocks = sheet_blocks(second);
  int first_growth =
      static_cast<int>(first_blocks.target.size()) - static_cast<int>(first_blocks.source.size());
  int second_growth = static_cast<int>(second_blocks.target.size()) -
                      static_cast<int>(second_blocks.source.size());
  // When both readings hold (empty blocks touching at one depth), treat the
  // later sheet as sitting below: that keeps a sheet anchored to the material
  // it consumes, and makes bubbling past a whole region track its endpoints.
  if (second.depth >= first.depth + static_cast<int>(first_blocks.target.size())) {
    // Below: undo the earlier sheet's growth to address the original frame.
    second.depth -= first_growth;
  } else {
    // Above: the earlier sheet slides by however much the later one grows.
    first.depth += second_growth;
  }
  Movie out = movie;
  out.sheets[index] = second;
  out.sheets[index + 1] = first;
  return out;
}

}  // namespace t2
