#pragma once

#include <memory>
#include <vector>

#include "t2/movies.hpp"
#include "t2/relations.hpp"
#include "t2/rewrite.hpp"

namespace t2 {

// One move in a rewrite path: a catalog equation applied at a site, or, when
// `rule` is empty, an interchange swap of the sheets at site.sheet and
// site.sheet + 1.
struct RewriteStep {
  std::shared_ptr<const RelationInstance> rule;
  Site site;
  Direction direction = Direction::L2R;
};

// Applies one step to a movie.
Movie apply_step(const Movie& movie, const RewriteStep& step);

enum class Verdict { Equal, Unknown };

// Outcome of a bounded search. Equal carries a path replayable from the first
// endpoint's movie to the second's. Unknown only means the bound (or the rule
// pool) ran out; it never asserts inequality.
struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<RewriteStep> path;
};

// The equation pool for a search between two endpoints: catalog schemas
// instantiated over the bare generators, the morphism and 2-cell arguments
// mined from both terms, and objects up to the widest frame either endpoint
// passes through. Deterministic order; rules whose sides normalize to the
// same movie are dropped.
std::vector<std::shared_ptr<const RelationInstance>> default_rules(const TwoTerm& a,
                                                                   const TwoTerm& b);

// Bidirectional breadth-first search for a chain of at most `depth` rewrites
// or interchange swaps connecting the two terms' movies. NotParallelError
// unless the endpoints share both boundaries. Deterministic: rules are tried
// in pool order and sites in scan order, on frontiers kept in movie order.
SearchResult equivalent_bounded(const TwoTerm& a, const TwoTerm& b, int depth);
SearchResult equivalent_bounded(const TwoTerm& a, const TwoTerm& b, int depth,
                                const std::vector<std::shared_ptr<const RelationInstance>>& rules);

}  // namespace t2
