#pragma once

#include <compare>
#include <memory>
#include <variant>
#include <vector>

#include "t2/errors.hpp"
#include "t2/objects.hpp"

namespace t2 {

// The four generating morphisms. cap births a pair of strands (I -> Z Z),
// cup kills one (Z Z -> I), pos and neg are the two crossings (Z Z -> Z Z).
// neg is a primitive generator, not a derived inverse; the relation between
// pos and neg lives in the relation catalog.
enum class MorGen { cap, cup, pos, neg };

Object gen_source(MorGen g);
Object gen_target(MorGen g);
MorGen gen_dual(MorGen g);  // cap <-> cup, pos <-> neg
const char* gen_name(MorGen g);

struct MorNode;

// A morphism term: an immutable tree of identities, generators, whiskerings
// by identity strands, and top-to-bottom composites. Subtrees are shared.
class MorTerm {
 public:
  static MorTerm identity(int width);
  static MorTerm identity(Object a) { return identity(a.width); }
  static MorTerm generator(MorGen g);
  // Tensors `left` identity strands on the left of `body` and `right` on the
  // right. A (0, body, 0) whisker is collapsed to `body` itself.
  static MorTerm whisker(int left, const MorTerm& body, int right);

  // Diagram-order composite: this morphism first, `next` below it.
  MorTerm then(const MorTerm& next) const;

  const MorNode& node() const { return *node_; }

 private:
  explicit MorTerm(std::shared_ptr<const MorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const MorNode> node_;
};

struct MorIdentity {
  Object object;
};
struct MorGenerator {
  MorGen gen;
};
struct MorWhisker {
  int left;
  MorTerm body;
  int right;
};
struct MorCompose {
  MorTerm first;
  MorTerm second;
};
struct MorNode {
  std::variant<MorIdentity, MorGenerator, MorWhisker, MorCompose> v;
};

struct MorType {
  Object source;
  Object target;
};

// One layer of a diagram: a single generator with identity strands on both
// sides. Slices are the letters of the normal form.
struct Slice {
  int left = 0;
  MorGen gen = MorGen::cap;
  int right = 0;

  int source_width() const { return left + gen_source(gen).width + right; }
  int target_width() const { return left + gen_target(gen).width + right; }
  // Mirror image in time: same position, dual generator.
  Slice dualized() const { return {left, gen_dual(gen), right}; }

  auto operator<=>(const Slice&) const = default;
};

// Normal form of a morphism: the input strand count and the layers read top
// to bottom. Equality of normal forms is the morphism equality this calculus
// provides; no diagram moves are quotiented here.
struct MorNormal {
  int source_width = 0;
  std::vector<Slice> slices;

  int target_width() const;

  auto operator<=>(const MorNormal&) const = default;
};

// Source and target widths, or WidthMismatchError naming the offending
// subterm when a composite's boundary widths disagree.
MorType typecheck(const MorTerm& term);

// Flattens a term into its slice list. Typechecks along the way.
MorNormal normalize(const MorTerm& term);

// The evident term with one whiskered generator per slice.
MorTerm term_of(const MorNormal& normal);

// Mirror image in time: reverses composites and dualizes generators, keeping
// every whisker in place. An involution, contravariant on composites.
MorTerm dual(const MorTerm& term);
MorNormal dual(const MorNormal& normal);

// Normal-form equality.
bool equal(const MorTerm& a, const MorTerm& b);

// Compact one-line form for diagnostics, e.g. "[2->2: (0 cap 1) (1 cup 0)]".
std::string to_string(const MorNormal& normal);

// The block crossing R for Z^m over Z^n, expanded into the m*n-crossing
// lattice. The left block crosses strand by strand, rightmost strand first,
// each strand walking left to right; this is the fixed canonical order, and
// every other bracketing of the same walk normalizes to the same slices.
MorTerm braiding(int left_width, int right_width);

// The nested cap pyramid i: I -> Z^n Z^n that births n strands, and its
// mirror, the cup pyramid e: Z^n Z^n -> I.
MorTerm object_unit(int width);
MorTerm object_counit(int width);

// The balancing loop on Z^n: birth a pyramid, cross the block over itself,
// kill the pyramid. Width n -> n.
MorTerm balancing(int width);

}  // namespace t2
