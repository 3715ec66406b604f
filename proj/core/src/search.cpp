#include "t2/search.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "t2/errors.hpp"

namespace t2 {

Movie apply_step(const Movie& movie, const RewriteStep& step) {
  if (!step.rule) return interchange_swap(movie, step.site.sheet);
  return rewrite(movie, *step.rule, step.site, step.direction);
}

namespace {

using RulePtr = std::shared_ptr<const RelationInstance>;

// Argument material harvested from the endpoints. Bare generators come
// first so the pool order does not depend on term layout.
struct Mined {
  std::vector<MorTerm> morphisms;
  std::vector<std::pair<MorTerm, MorTerm>> tensorator_pairs;
  std::vector<TwoTerm> two_cells;
  int max_width = 1;
};

constexpr size_t kMaxMorphisms = 24;
constexpr size_t kMaxPairs = 16;
constexpr size_t kMaxTwoCells = 32;
constexpr int kMaxTwoCellRules = 24;
constexpr size_t kNodeCap = 20000;
constexpr size_t kExpansionBudget = 4000;

struct Miner {
  Mined mined;
  std::set<MorNormal> morphisms_seen;
  std::set<std::pair<MorNormal, MorNormal>> pairs_seen;
  std::set<Movie> two_cells_seen;

  void add_morphism(const MorTerm& term) {
    if (mined.morphisms.size() >= kMaxMorphisms) return;
    if (morphisms_seen.insert(normalize(term)).second) mined.morphisms.push_back(term);
  }

  void add_pair(const MorTerm& f, const MorTerm& g) {
    if (mined.tensorator_pairs.size() >= kMaxPairs) return;
    if (pairs_seen.insert({normalize(f), normalize(g)}).second)
      mined.tensorator_pairs.emplace_back(f, g);
  }

  void visit(const TwoTerm& term) {
    if (mined.two_cells.size() < kMaxTwoCells && two_cells_seen.insert(normalize(term)).second)
      mined.two_cells.push_back(term);
    const auto& v = term.node().v;
    if (const auto* node = std::get_if<TwoIdentity>(&v)) {
      add_morphism(node->f);
    } else if (const auto* node = std::get_if<TwoTensorator>(&v)) {
      add_pair(node->f, node->g);
      add_morphism(node->f);
      add_morphism(node->g);
    } else if (const auto* node = std::get_if<TwoBraidZf>(&v)) {
      add_morphism(node->g);
    } else if (const auto* node = std::get_if<TwoBraidFz>(&v)) {
      add_morphism(node->f);
    } else if (const auto* node = std::get_if<TwoUnit>(&v)) {
      add_morphism(node->f);
    } else if (const auto* node = std::get_if<TwoWhisker>(&v)) {
      visit(node->body);
    } else if (const auto* node = std::get_if<TwoVertical>(&v)) {
      visit(node->first);
      visit(node->second);
    } else if (const auto* node = std::get_if<TwoHorizontal>(&v)) {
      visit(node->first);
      visit(node->second);
    } else if (const auto* node = std::get_if<TwoDual>(&v)) {
      visit(node->body);
    }
  }
};

int max_frame_width(const Movie& movie) {
  int best = 1;
  for (const MorNormal& frame : frames(movie)) {
    best = std::max(best, frame.source_width);
    for (const Slice& slice : frame.slices) best = std::max(best, slice.target_width());
  }
  return best;
}

Mined mine(const TwoTerm& a, const TwoTerm& b) {
  Miner miner;
  for (MorGen gen : {MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg})
    miner.add_morphism(MorTerm::generator(gen));
  miner.visit(a);
  miner.visit(b);
  miner.mined.max_width = std::max(max_frame_width(normalize(a)), max_frame_width(normalize(b)));
  return std::move(miner.mined);
}

struct PoolBuilder {
  std::vector<RulePtr> pool;
  std::set<std::pair<Movie, Movie>> seen;

  // True when the schema accepted the arguments, whether or not the instance
  // earned a pool slot; the caller's caps count acceptances so that pruning
  // cannot shift which argument tuples get tried.
  bool try_add(const std::string& schema, std::vector<RelationArg> args) {
    std::optional<RelationInstance> instance;
    try {
      instance = instantiate(schema, std::move(args));
    } catch (const Error&) {
      return false;
    }
    Movie lhs = normalize(instance->lhs);
    Movie rhs = normalize(instance->rhs);
    if (lhs == rhs) return true;
    if (!seen.insert({std::move(lhs), std::move(rhs)}).second) return true;
    pool.push_back(std::make_shared<const RelationInstance>(std::move(*instance)));
    return true;
  }
};

}  // namespace

std::vector<RulePtr> default_rules(const TwoTerm& a, const TwoTerm& b) {
  Mined mined = mine(a, b);
  PoolBuilder builder;
  for (const RelationSchema& schema : catalog()) {
    const std::vector<ArgKind>& kinds = schema.arg_kinds;
    if (kinds.empty()) {
      builder.try_add(schema.name, {});
    } else if (kinds == std::vector<ArgKind>{ArgKind::morphism}) {
      for (const MorTerm& f : mined.morphisms) builder.try_add(schema.name, {f});
    } else if (kinds == std::vector<ArgKind>{ArgKind::morphism, ArgKind::morphism}) {
      for (const MorTerm& f : mined.morphisms)
        if (std::holds_alternative<MorGenerator>(f.node().v))
          for (const MorTerm& g : mined.morphisms)
            if (std::holds_alternative<MorGenerator>(g.node().v))
              builder.try_add(schema.name, {f, g});
      for (const auto& [f, g] : mined.tensorator_pairs) builder.try_add(schema.name, {f, g});
    } else if (kinds == std::vector<ArgKind>{ArgKind::object}) {
      for (int x = 1; x <= std::min(mined.max_width, 8); ++x)
        builder.try_add(schema.name, {Object{x}});
    } else if (kinds == std::vector<ArgKind>{ArgKind::object, ArgKind::object}) {
      int cap = std::min(mined.max_width, 6);
      for (int x = 1; x <= cap; ++x)
        for (int y = 1; y <= cap; ++y) builder.try_add(schema.name, {Object{x}, Object{y}});
    } else if (kinds ==
               std::vector<ArgKind>{ArgKind::object, ArgKind::object, ArgKind::object}) {
      int cap = std::min(mined.max_width, 4);
      for (int x = 1; x <= cap; ++x)
        for (int y = 1; y <= cap; ++y)
          for (int z = 1; z <= cap; ++z)
            builder.try_add(schema.name, {Object{x}, Object{y}, Object{z}});
    } else if (kinds == std::vector<ArgKind>{ArgKind::two_morphism}) {
      for (const TwoTerm& alpha : mined.two_cells) builder.try_add(schema.name, {alpha});
    } else if (kinds == std::vector<ArgKind>{ArgKind::two_morphism, ArgKind::two_morphism}) {
      int accepted = 0;
      for (const TwoTerm& alpha : mined.two_cells) {
        for (const TwoTerm& beta : mined.two_cells) {
          if (builder.try_add(schema.name, {alpha, beta})) ++accepted;
          if (accepted >= kMaxTwoCellRules) break;
        }
        if (accepted >= kMaxTwoCellRules) break;
      }
    }
  }
  return std::move(builder.pool);
}

namespace {

RewriteStep inverted(const RewriteStep& step) {
  if (!step.rule) return step;
  RewriteStep out = step;
  out.direction = step.direction == Direction::L2R ? Direction::R2L : Direction::L2R;
  return out;
}

struct Wave {
  std::map<Movie, std::vector<RewriteStep>> visited;
  std::vector<Movie> frontier;
};

// Bidirectional breadth-first search over the prepared rule pool plus
// structural interchange swaps. A path of length d splits as ceil(d/2) from
// the front and floor(d/2) from the back, so full-level expansion with a
// cross-side membership check finds every connection within the bound.
class Search {
 public:
  explicit Search(std::vector<PreparedRule> rules) : rules_(std::move(rules)) {}

  SearchResult run(const Movie& start, const Movie& goal, int depth) {
    if (start == goal) return {Verdict::Equal, {}};
    forward_.visited.emplace(start, std::vector<RewriteStep>{});
    forward_.frontier.push_back(start);
    backward_.visited.emplace(goal, std::vector<RewriteStep>{});
    backward_.frontier.push_back(goal);
    int forward_levels = (depth + 1) / 2;
    int backward_levels = depth / 2;
    for (int level = 1; level <= std::max(forward_levels, backward_levels); ++level) {
      if (level <= forward_levels)
        if (auto meet = expand(forward_, backward_)) return assemble(*meet);
      if (level <= backward_levels)
        if (auto meet = expand(backward_, forward_)) return assemble(*meet);
      if (forward_.frontier.empty() && backward_.frontier.empty()) break;
    }
    return {Verdict::Unknown, {}};
  }

 private:
  std::optional<Movie> expand(Wave& side, const Wave& other) {
    std::vector<Movie> next;
    for (const Movie& movie : side.frontier) {
      if (expansions_ >= kExpansionBudget) break;
      ++expansions_;
      std::vector<MorNormal> movie_frames = frames(movie);
      const std::vector<RewriteStep>& base = side.visited.at(movie);
      for (const PreparedRule& rule : rules_) {
        for (Direction direction : {Direction::L2R, Direction::R2L}) {
          for (const Site& site : rewrite_sites(movie, movie_frames, rule, direction)) {
            Movie candidate = rewrite(movie, movie_frames, rule, site, direction);
            if (auto meet = note(side, other, std::move(candidate), base,
                                 {rule.rule, site, direction}, next))
              return meet;
          }
        }
      }
      for (int index : interchange_sites(movie)) {
        Movie candidate = interchange_swap(movie, index);
        if (auto meet = note(side, other, std::move(candidate), base,
                             {nullptr, Site{index, 0, 0, 0}, Direction::L2R}, next))
          return meet;
      }
    }
    side.frontier = std::move(next);
    return std::nullopt;
  }

  std::optional<Movie> note(Wave& side, const Wave& other, Movie&& candidate,
                            const std::vector<RewriteStep>& base, const RewriteStep& step,
                            std::vector<Movie>& next) {
    bool meet = other.visited.count(candidate) > 0;
    if (!meet && side.visited.size() >= kNodeCap) return std::nullopt;
    auto [it, fresh] = side.visited.try_emplace(std::move(candidate));
    if (!fresh) return std::nullopt;
    it->second = base;
    it->second.push_back(step);
    if (meet) return it->first;
    next.push_back(it->first);
    return std::nullopt;
  }

  SearchResult assemble(const Movie& meet) {
    std::vector<RewriteStep> path = forward_.visited.at(meet);
    const std::vector<RewriteStep>& back = backward_.visited.at(meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back(inverted(*it));
    return {Verdict::Equal, std::move(path)};
  }

  std::vector<PreparedRule> rules_;
  Wave forward_;
  Wave backward_;
  size_t expansions_ = 0;
};

}  // namespace

SearchResult equivalent_bounded(const TwoTerm& a, const TwoTerm& b, int depth,
                                const std::vector<RulePtr>& rules) {
  TwoType type_a = typecheck(a);
  TwoType type_b = typecheck(b);
  if (type_a.source != type_b.source || type_a.target != type_b.target)
    throw NotParallelError("endpoints " + to_string(type_a.source) + " => " +
                           to_string(type_a.target) + " and " + to_string(type_b.source) +
                           " => " + to_string(type_b.target) + " differ");
  std::vector<PreparedRule> prepared;
  prepared.reserve(rules.size());
  for (const RulePtr& rule : rules) prepared.push_back(prepare(rule));
  Search search(std::move(prepared));
  return search.run(normalize(a), normalize(b), std::max(depth, 0));
}

SearchResult equivalent_bounded(const TwoTerm& a, const TwoTerm& b, int depth) {
  return equivalent_bounded(a, b, depth, default_rules(a, b));
}

}  // namespace t2
