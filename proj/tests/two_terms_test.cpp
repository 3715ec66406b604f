#include "t2/two_terms.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "t2/errors.hpp"

namespace t2 {
namespace {

using testing::Rng;

MorTerm g(MorGen x) { return MorTerm::generator(x); }

TEST(Boundaries, Identity) {
  TwoType ty = typecheck(TwoTerm::identity(g(MorGen::cap)));
  EXPECT_EQ(ty.source, (MorNormal{0, {{0, MorGen::cap, 0}}}));
  EXPECT_EQ(ty.target, ty.source);
}

TEST(Boundaries, Tensorator) {
  TwoType ty = typecheck(TwoTerm::tensorator(g(MorGen::cap), g(MorGen::cup)));
  EXPECT_EQ(ty.source, (MorNormal{2, {{0, MorGen::cup, 0}, {0, MorGen::cap, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{2, {{0, MorGen::cap, 2}, {2, MorGen::cup, 0}}}));
}

TEST(Boundaries, TensoratorWideArgs) {
  // f: Z^2 -> I, g: I -> Z^2: both orders factor through opposite corners.
  TwoType ty = typecheck(TwoTerm::tensorator(g(MorGen::cup), g(MorGen::cap)));
  EXPECT_EQ(ty.source, (MorNormal{2, {{2, MorGen::cap, 0}, {0, MorGen::cup, 2}}}));
  EXPECT_EQ(ty.target, (MorNormal{2, {{0, MorGen::cup, 0}, {0, MorGen::cap, 0}}}));
}

TEST(Boundaries, BraidOverCap) {
  TwoType ty = typecheck(TwoTerm::braid_zf(g(MorGen::cap)));
  EXPECT_EQ(ty.source,
            (MorNormal{1, {{1, MorGen::cap, 0}, {0, MorGen::pos, 1}, {1, MorGen::pos, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{1, {{0, MorGen::cap, 1}}}));
}

TEST(Boundaries, BraidCupUnderStrand) {
  TwoType ty = typecheck(TwoTerm::braid_fz(g(MorGen::cup)));
  EXPECT_EQ(ty.source, (MorNormal{3, {{0, MorGen::cup, 1}}}));
  EXPECT_EQ(ty.target,
            (MorNormal{3, {{1, MorGen::pos, 0}, {0, MorGen::pos, 1}, {1, MorGen::cup, 0}}}));
}

TEST(Boundaries, UnitMakesAZigZagPair) {
  TwoType cap_unit = typecheck(TwoTerm::unit(g(MorGen::cap)));
  EXPECT_EQ(cap_unit.source, (MorNormal{0, {}}));
  EXPECT_EQ(cap_unit.target, (MorNormal{0, {{0, MorGen::cap, 0}, {0, MorGen::cup, 0}}}));

  TwoType pos_unit = typecheck(TwoTerm::unit(g(MorGen::pos)));
  EXPECT_EQ(pos_unit.source, (MorNormal{2, {}}));
  EXPECT_EQ(pos_unit.target, (MorNormal{2, {{0, MorGen::pos, 0}, {0, MorGen::neg, 0}}}));
}

TEST(Boundaries, TriangulatorStraightensTheZigZag) {
  TwoType ty = typecheck(TwoTerm::triangulator());
  EXPECT_EQ(ty.source, (MorNormal{1, {{0, MorGen::cap, 1}, {1, MorGen::cup, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{1, {}}));
}

TEST(Boundaries, WrithingAddsAKink) {
  TwoType ty = typecheck(TwoTerm::writhing());
  EXPECT_EQ(ty.source, (MorNormal{0, {{0, MorGen::cap, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{0, {{0, MorGen::cap, 0}, {0, MorGen::pos, 0}}}));
}

TEST(Boundaries, WhiskerPadsBothSides) {
  TwoType ty = typecheck(TwoTerm::whisker(2, TwoTerm::writhing(), 1));
  EXPECT_EQ(ty.source, (MorNormal{3, {{2, MorGen::cap, 1}}}));
  EXPECT_EQ(ty.target, (MorNormal{3, {{2, MorGen::cap, 1}, {2, MorGen::pos, 1}}}));
}

TEST(Boundaries, VerticalChainsAndChecks) {
  TwoTerm w = TwoTerm::writhing();
  TwoType ty = typecheck(TwoTerm::vertical(w, TwoTerm::identity(g(MorGen::cap).then(g(MorGen::pos)))));
  EXPECT_EQ(ty.source, (MorNormal{0, {{0, MorGen::cap, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{0, {{0, MorGen::cap, 0}, {0, MorGen::pos, 0}}}));

  EXPECT_THROW(typecheck(TwoTerm::vertical(w, w)), Ill2TypedError);
}

TEST(Boundaries, HorizontalConcatenatesAndChecks) {
  TwoTerm i_cap = TwoTerm::unit(g(MorGen::cap));
  // Writhing lives between I and Z^2, the triangulator between Z and Z.
  EXPECT_THROW(typecheck(TwoTerm::horizontal(TwoTerm::writhing(), TwoTerm::triangulator())),
               Ill2TypedError);

  TwoType ty = typecheck(TwoTerm::horizontal(i_cap, i_cap));
  EXPECT_EQ(ty.source, (MorNormal{0, {}}));
  EXPECT_EQ(ty.target, (MorNormal{0,
                                  {{0, MorGen::cap, 0},
                                   {0, MorGen::cup, 0},
                                   {0, MorGen::cap, 0},
                                   {0, MorGen::cup, 0}}}));
}

TEST(Boundaries, DualReverses) {
  TwoType ty = typecheck(TwoTerm::dual(TwoTerm::writhing()));
  EXPECT_EQ(ty.source, (MorNormal{0, {{0, MorGen::cap, 0}, {0, MorGen::pos, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{0, {{0, MorGen::cap, 0}}}));
}

TEST(Counit, CollapsesTheOppositeZigZag) {
  TwoType ty = typecheck(counit(g(MorGen::cap)));
  EXPECT_EQ(ty.source, (MorNormal{2, {{0, MorGen::cup, 0}, {0, MorGen::cap, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{2, {}}));
}

TEST(Adjoint, IdentityOnCap) {
  TwoType ty = typecheck(adjoint(TwoTerm::identity(g(MorGen::cap))));
  EXPECT_EQ(ty.source, (MorNormal{2, {{0, MorGen::cup, 0}}}));
  EXPECT_EQ(ty.target, ty.source);
}

TEST(Adjoint, Writhing) {
  TwoType ty = typecheck(adjoint(TwoTerm::writhing()));
  EXPECT_EQ(ty.source, (MorNormal{2, {{0, MorGen::neg, 0}, {0, MorGen::cup, 0}}}));
  EXPECT_EQ(ty.target, (MorNormal{2, {{0, MorGen::cup, 0}}}));
}

TEST(Adjoint, SwapsAndDualizesBoundaries) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    TwoTerm a = testing::random_two_term(rng, 4);
    TwoType ty = typecheck(a);
    TwoType adj = typecheck(adjoint(a));
    EXPECT_EQ(adj.source, dual(ty.target));
    EXPECT_EQ(adj.target, dual(ty.source));
  }
}

TEST(TriangulatorOf, SmallCases) {
  TwoType t0 = typecheck(triangulator_of(0));
  EXPECT_EQ(t0.source, (MorNormal{0, {}}));
  EXPECT_EQ(t0.target, (MorNormal{0, {}}));

  TwoType t2 = typecheck(triangulator_of(2));
  EXPECT_EQ(t2.source, (MorNormal{2,
                                  {{0, MorGen::cap, 2},
                                   {1, MorGen::cap, 3},
                                   {3, MorGen::cup, 1},
                                   {2, MorGen::cup, 0}}}));
  EXPECT_EQ(t2.target, (MorNormal{2, {}}));
}

TEST(TriangulatorOf, StraightensEveryWidth) {
  for (int n = 0; n <= 5; ++n) {
    TwoType ty = typecheck(triangulator_of(n));
    MorTerm zigzag =
        MorTerm::whisker(0, object_unit(n), n).then(MorTerm::whisker(n, object_counit(n), 0));
    EXPECT_EQ(ty.source, normalize(zigzag));
    EXPECT_EQ(ty.target, (MorNormal{n, {}}));
  }
}

TEST(RandomTerms, AlwaysTypecheck) {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    TwoTerm a = testing::random_two_term(rng, 6);
    TwoType ty = typecheck(a);
    EXPECT_EQ(ty.source.source_width, ty.target.source_width);
    EXPECT_EQ(ty.source.target_width(), ty.target.target_width());

    TwoType rev = typecheck(TwoTerm::dual(a));
    EXPECT_EQ(rev.source, ty.target);
    EXPECT_EQ(rev.target, ty.source);
  }
}

}  // namespace
}  // namespace t2
