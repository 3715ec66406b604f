#include <benchmark/benchmark.h>

#include "t2/models.hpp"
#include "t2/morphisms.hpp"
#include "t2/movies.hpp"
#include "t2/search.hpp"
#include "t2/two_terms.hpp"

namespace {

// The zigzag bend on f: what the straightening relation collapses.
t2::TwoTerm zigzag_bend(const t2::MorTerm& f) {
  return t2::TwoTerm::vertical(
      t2::TwoTerm::horizontal(t2::TwoTerm::unit(f), t2::TwoTerm::identity(f)),
      t2::TwoTerm::horizontal(t2::TwoTerm::identity(f), t2::counit(f)));
}

t2::Model identity_model(int dim) {
  return t2::Model::linear(dim, t2::Matrix::identity(dim));
}

void BM_BraidingConstruction(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t2::braiding(n, n));
}
BENCHMARK(BM_BraidingConstruction)->Arg(2)->Arg(4)->Arg(8);

void BM_NormalizeBraiding(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  t2::MorTerm term = t2::braiding(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(t2::normalize(term));
}
BENCHMARK(BM_NormalizeBraiding)->Arg(2)->Arg(4)->Arg(8);

void BM_NormalizeBend(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  t2::TwoTerm term = zigzag_bend(t2::braiding(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(t2::normalize(term));
}
BENCHMARK(BM_NormalizeBend)->Arg(1)->Arg(2)->Arg(3);

void BM_EvaluateBraiding(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  t2::Model model = identity_model(2);
  t2::MorNormal normal = t2::normalize(t2::braiding(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(t2::evaluate(normal, model));
}
BENCHMARK(BM_EvaluateBraiding)->Arg(2)->Arg(3)->Arg(4);

void BM_WitnessAdjointWrithing(benchmark::State& state) {
  t2::Model model = identity_model(2);
  t2::TwoTerm term = t2::adjoint(t2::TwoTerm::writhing());
  for (auto _ : state) benchmark::DoNotOptimize(t2::evaluate(term, model));
}
BENCHMARK(BM_WitnessAdjointWrithing);

void BM_SearchZigzag(benchmark::State& state) {
  t2::MorTerm cap = t2::MorTerm::generator(t2::MorGen::cap);
  t2::TwoTerm lhs = zigzag_bend(cap);
  t2::TwoTerm rhs = t2::TwoTerm::identity(cap);
  for (auto _ : state) benchmark::DoNotOptimize(t2::equivalent_bounded(lhs, rhs, 1));
}
BENCHMARK(BM_SearchZigzag);

void BM_SearchLoopPairs(benchmark::State& state) {
  t2::TwoTerm loop =
      t2::TwoTerm::vertical(t2::TwoTerm::writhing(), t2::TwoTerm::dual(t2::TwoTerm::writhing()));
  t2::TwoTerm lhs = t2::TwoTerm::vertical(loop, loop);
  t2::TwoTerm rhs = t2::TwoTerm::identity(t2::MorTerm::generator(t2::MorGen::cap));
  for (auto _ : state) benchmark::DoNotOptimize(t2::equivalent_bounded(lhs, rhs, 2));
}
BENCHMARK(BM_SearchLoopPairs);

}  // namespace

BENCHMARK_MAIN();
