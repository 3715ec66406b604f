#pragma once

#include <memory>
#include <variant>

#include "t2/morphisms.hpp"

namespace t2 {

struct TwoNode;

// Immutable 2-cell term over the term calculus of 1-cells. Construction never
// validates; typecheck() below reports the boundary pair or throws.
class TwoTerm {
 public:
  // Identity 2-cell 1_f on a 1-term f.
  static TwoTerm identity(MorTerm f);

  // Tensorator for f: A -> A' and g: B -> B', mediating the two ways of
  // tensoring f and g one after the other:
  //   (A(x)g);(f(x)B') ==> (f(x)B);(A'(x)g).
  static TwoTerm tensorator(MorTerm f, MorTerm g);

  // Braiding of the strand over a 1-term g: B -> B',
  //   (Z(x)g);R_{Z,B'} ==> R_{Z,B};(g(x)Z).
  static TwoTerm braid_zf(MorTerm g);

  // Braiding of a 1-term f: A -> A' over the strand,
  //   (f(x)Z);R_{A',Z} ==> R_{A,Z};(Z(x)f).
  static TwoTerm braid_fz(MorTerm f);

  // Unit i_f: 1_A ==> f;f* exhibiting f* as the dual of f: A -> B.
  static TwoTerm unit(MorTerm f);

  // Triangulator on the strand: (i_Z(x)Z);(Z(x)e_Z) ==> 1_Z.
  static TwoTerm triangulator();

  // Writhing on the strand: cap ==> cap;(positive crossing).
  static TwoTerm writhing();

  // Body padded by identity strands. Collapses to `body` when both paddings
  // are zero.
  static TwoTerm whisker(int left, TwoTerm body, int right);

  // First then second, stacked along the 2-cell direction. Requires the
  // target of `first` to equal the source of `second` slice for slice.
  static TwoTerm vertical(TwoTerm first, TwoTerm second);

  // First then second, side by side along the 1-cell direction: for
  // first: f ==> g and second: f' ==> g' this is f;f' ==> g;g'.
  static TwoTerm horizontal(TwoTerm first, TwoTerm second);

  // Reversal: for body: f ==> g this is the cell g ==> f. Every generator is
  // invertible with the reversal as its inverse.
  static TwoTerm dual(TwoTerm body);

  const TwoNode& node() const { return *node_; }

 private:
  explicit TwoTerm(std::shared_ptr<const TwoNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const TwoNode> node_;
};

struct TwoIdentity {
  MorTerm f;
};

struct TwoTensorator {
  MorTerm f;
  MorTerm g;
};

struct TwoBraidZf {
  MorTerm g;
};

struct TwoBraidFz {
  MorTerm f;
};

struct TwoUnit {
  MorTerm f;
};

struct TwoTriangulator {};

struct TwoWrithing {};

struct TwoWhisker {
  int left = 0;
  TwoTerm body;
  int right = 0;
};

struct TwoVertical {
  TwoTerm first;
  TwoTerm second;
};

struct TwoHorizontal {
  TwoTerm first;
  TwoTerm second;
};

struct TwoDual {
  TwoTerm body;
};

struct TwoNode {
  std::variant<TwoIdentity,
               TwoTensorator,
               TwoBraidZf,
               TwoBraidFz,
               TwoUnit,
               TwoTriangulator,
               TwoWrithing,
               TwoWhisker,
               TwoVertical,
               TwoHorizontal,
               TwoDual>
      v;
};

// Source and target 1-cells of a 2-cell, in normal form. The two are always
// parallel: same width at both ends.
struct TwoType {
  MorNormal source;
  MorNormal target;
};

// Computes the boundary pair, throwing Ill2TypedError where composites do not
// meet and propagating errors from ill-formed 1-term arguments.
TwoType typecheck(const TwoTerm& term);

// Counit e_f: f*;f ==> 1_B, derived as the reversal of the unit on f*.
TwoTerm counit(const MorTerm& f);

// Mate of a 2-cell under duality: for a: f ==> g this is g* ==> f*, built
// from `a` by bending both sides with units and counits.
TwoTerm adjoint(const TwoTerm& a);

// Triangulator on n parallel strands, assembled recursively from the
// one-strand triangulator and tensorator corrections.
TwoTerm triangulator_of(int width);

}  // namespace t2
