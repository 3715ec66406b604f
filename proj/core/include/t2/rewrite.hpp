#pragma once

#include <memory>
#include <string>
#include <vector>

#include "t2/movies.hpp"
#include "t2/relations.hpp"

namespace t2 {

// Which side of a rule to match; the other side is substituted.
enum class Direction { L2R, R2L };

const char* direction_name(Direction direction);

// Anchor of a rule application inside a movie: the index of the first matched
// sheet (or the insertion point when the matched side has no sheets), the
// slice depth of the matched source block inside the frame at that index, and
// the horizontal padding applied to the whole block.
struct Site {
  int sheet = 0;
  int depth = 0;
  int left = 0;
  int right = 0;

  auto operator<=>(const Site&) const = default;
};

std::string to_string(const Site& site);

// A rule with both sides normalized once, the working form of the engine.
struct PreparedRule {
  std::shared_ptr<const RelationInstance> rule;
  Movie lhs;
  Movie rhs;
};

PreparedRule prepare(std::shared_ptr<const RelationInstance> rule);

// Every site where the chosen side of the rule occurs in the movie, ordered
// by sheet index, then depth, then left padding. `movie_frames` must be
// frames(movie).
std::vector<Site> rewrite_sites(const Movie& movie, const std::vector<MorNormal>& movie_frames,
                                const PreparedRule& rule, Direction direction);
std::vector<Site> rewrite_sites(const Movie& movie, const RelationInstance& rule,
                                Direction direction);

// Substitutes the other side of the rule at a matched site. The substituted
// block has the same boundary as the matched one, so the surrounding frames
// survive unchanged. NoMatchError when the side does not occur at `site`.
Movie rewrite(const Movie& movie, const std::vector<MorNormal>& movie_frames,
              const PreparedRule& rule, const Site& site, Direction direction);
Movie rewrite(const Movie& movie, const RelationInstance& rule, const Site& site,
              Direction direction);

// Term-level wrapper: normalize, rewrite, read back.
TwoTerm rewrite_step(const TwoTerm& term, const RelationInstance& rule, const Site& site,
                     Direction direction);

// True when sheets `index` and `index + 1` touch disjoint slice ranges, so
// they can run in either order.
bool sheets_independent(const Movie& movie, int index);

// Every index where adjacent sheets are independent.
std::vector<int> interchange_sites(const Movie& movie);

// Swaps two independent adjacent sheets, adjusting the later sheet's depth so
// all other frames are preserved. An involution on its site. NoMatchError on
// dependent sheets.
Movie interchange_swap(const Movie& movie, int index);

}  // namespace t2
