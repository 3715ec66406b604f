#pragma once

// Shared helpers for the test suites: a small deterministic RNG wrapper and
// generators for random well-formed terms. Random morphisms are produced as
// valid slice chains first and then rebuilt into randomly bracketed terms, so
// every generated term is well typed by construction and its expected normal
// form is known independently of the library's own flattening.

#include <cstdint>
#include <random>
#include <vector>

#include "t2/morphisms.hpp"
#include "t2/relations.hpp"
#include "t2/two_terms.hpp"

namespace t2::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, n). Uses plain modulo so streams are identical across
  // platforms; the slight bias is irrelevant for test generation.
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  bool flip() { return (eng_() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(below(static_cast<int>(xs.size())))];
  }

 private:
  std::mt19937_64 eng_;
};

inline MorGen random_gen(Rng& rng) {
  static const std::vector<MorGen> all{MorGen::cap, MorGen::cup, MorGen::pos, MorGen::neg};
  return all[static_cast<std::size_t>(rng.below(4))];
}

// A random valid slice chain with every frame width at most max_width.
inline MorNormal random_normal(Rng& rng, int max_width, int max_slices) {
  MorNormal out;
  out.source_width = rng.below(max_width + 1);
  int width = out.source_width;
  int count = rng.below(max_slices + 1);
  for (int i = 0; i < count; ++i) {
    MorGen g = random_gen(rng);
    if (width < 2 && gen_source(g).width == 2) g = MorGen::cap;
    if (width + 2 > max_width && g == MorGen::cap) {
      if (width < 2) break;
      g = MorGen::cup;
    }
    int room = width - gen_source(g).width;
    int left = rng.below(room + 1);
    out.slices.push_back(Slice{left, g, room - left});
    width = out.slices.back().target_width();
  }
  return out;
}

inline int width_at(const MorNormal& n, std::size_t k) {
  return k == 0 ? n.source_width : n.slices[k - 1].target_width();
}

// Rebuilds slices [from, to) of `n` as a randomly bracketed term, inserting
// identity composites and splitting whiskers at random. Normalizing the
// result must reproduce the slice chain exactly.
inline MorTerm bushy_term(Rng& rng, const MorNormal& n, std::size_t from, std::size_t to) {
  if (from == to) return MorTerm::identity(width_at(n, from));
  if (to - from == 1) {
    const Slice& s = n.slices[from];
    int a = rng.below(s.left + 1);
    int b = rng.below(s.right + 1);
    MorTerm core = MorTerm::whisker(s.left - a, MorTerm::generator(s.gen), s.right - b);
    MorTerm t = MorTerm::whisker(a, core, b);
    if (rng.below(4) == 0) t = MorTerm::identity(width_at(n, from)).then(t);
    if (rng.below(4) == 0) t = t.then(MorTerm::identity(width_at(n, from + 1)));
    return t;
  }
  std::size_t cut = from + 1 + static_cast<std::size_t>(rng.below(static_cast<int>(to - from - 1)));
  return bushy_term(rng, n, from, cut).then(bushy_term(rng, n, cut, to));
}

inline MorTerm bushy_term(Rng& rng, const MorNormal& n) {
  return bushy_term(rng, n, 0, n.slices.size());
}

inline MorTerm random_term(Rng& rng, int max_width = 4, int max_slices = 6) {
  MorNormal n = random_normal(rng, max_width, max_slices);
  return bushy_term(rng, n);
}

// A random 2-morphism built from generator cells with small arguments,
// combined by the typed constructors. Combination steps that would not
// typecheck are skipped, so the result is always well typed.
inline TwoTerm random_two_term(Rng& rng, int size) {
  auto leaf = [&]() -> TwoTerm {
    switch (rng.below(8)) {
      case 0: return TwoTerm::triangulator();
      case 1: return TwoTerm::writhing();
      case 2: return TwoTerm::tensorator(random_term(rng, 3, 2), random_term(rng, 3, 2));
      case 3: return TwoTerm::braid_zf(random_term(rng, 2, 2));
      case 4: return TwoTerm::braid_fz(random_term(rng, 2, 2));
      case 5: return TwoTerm::unit(random_term(rng, 2, 2));
      case 6: return TwoTerm::identity(random_term(rng, 3, 3));
      default: return counit(random_term(rng, 2, 2));
    }
  };
  TwoTerm acc = leaf();
  for (int i = 0; i < size; ++i) {
    switch (rng.below(5)) {
      case 0: acc = TwoTerm::whisker(rng.below(2), acc, rng.below(2)); break;
      case 1: acc = TwoTerm::dual(acc); break;
      case 2: {
        // Vertical stacking always typechecks against the term's own target.
        TwoType ty = typecheck(acc);
        acc = TwoTerm::vertical(acc, TwoTerm::identity(term_of(ty.target)));
        if (rng.flip()) acc = TwoTerm::vertical(acc, TwoTerm::dual(acc));
        break;
      }
      case 3: {
        TwoTerm other = leaf();
        try {
          TwoTerm joined = TwoTerm::horizontal(acc, other);
          typecheck(joined);
          acc = joined;
        } catch (const Error&) {
        }
        break;
      }
      default: {
        TwoTerm other = leaf();
        try {
          TwoTerm joined = TwoTerm::horizontal(other, acc);
          typecheck(joined);
          acc = joined;
        } catch (const Error&) {
        }
        break;
      }
    }
  }
  return acc;
}

// Random arguments of a schema's declared kinds, small enough to instantiate
// without retries. Second 2-cell arguments continue where the first one's
// source leaves off, or the schema's composite would not typecheck.
inline std::vector<RelationArg> random_schema_args(Rng& rng, const RelationSchema& schema) {
  std::vector<RelationArg> args;
  for (std::size_t i = 0; i < schema.arg_kinds.size(); ++i) {
    switch (schema.arg_kinds[i]) {
      case ArgKind::object:
        args.emplace_back(Object{1 + rng.below(3)});
        break;
      case ArgKind::morphism:
        args.emplace_back(random_term(rng, 3, 3));
        break;
      case ArgKind::two_morphism:
        if (i == 1) {
          const TwoTerm& first = std::get<TwoTerm>(args[0]);
          int width = typecheck(first).source.target_width();
          MorNormal walk;
          walk.source_width = width;
          int current = width;
          int steps = rng.below(3);
          for (int s = 0; s < steps; ++s) {
            MorGen g = random_gen(rng);
            if (current < 2 && gen_source(g).width == 2) g = MorGen::cap;
            if (current > 3 && g == MorGen::cap) g = MorGen::cup;
            int room = current - gen_source(g).width;
            int left = rng.below(room + 1);
            walk.slices.push_back({left, g, room - left});
            current = walk.slices.back().target_width();
          }
          MorTerm h = term_of(walk);
          args.emplace_back(rng.flip() ? TwoTerm::identity(h) : TwoTerm::unit(h));
        } else {
          args.emplace_back(random_two_term(rng, 2));
        }
        break;
    }
  }
  return args;
}

}  // namespace t2::testing
