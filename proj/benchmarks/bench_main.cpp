#include <benchmark/benchmark.h>

#include "curvewalk/convolution.hpp"
#include "curvewalk/drift.hpp"
#include "curvewalk/farey.hpp"
#include "curvewalk/graph_gen.hpp"
#include "curvewalk/propositions.hpp"
#include "curvewalk/walk.hpp"

using namespace curvewalk;

static void FareyDistanceWalkElement(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  StepDistribution mu = StepDistribution::uniform_lr();
  WalkCursor cursor(mu, 99);
  cursor.advance(steps);
  Slope target = mobius(cursor.position(), base_slope());
  for (auto _ : state) {
    benchmark::DoNotOptimize(farey_distance(base_slope(), target));
  }
  state.SetComplexityN(steps);
}
BENCHMARK(FareyDistanceWalkElement)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void WalkSteps(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  StepDistribution mu = StepDistribution::uniform_lr();
  for (auto _ : state) {
    WalkCursor cursor(mu, 7);
    cursor.advance(steps);
    benchmark::DoNotOptimize(cursor.position());
  }
  state.SetComplexityN(steps);
}
BENCHMARK(WalkSteps)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void ExactConvolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StepDistribution mu = StepDistribution::uniform_lr();
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolution(mu, n));
  }
}
BENCHMARK(ExactConvolution)->DenseRange(2, 8, 2);

static void VerifierSuiteFareyBall(benchmark::State& state) {
  FareyBall ball = farey_ball(static_cast<int>(state.range(0)));
  VerifyOptions opt;
  opt.samples = 20000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_propositions(ball.space, opt));
  }
}
BENCHMARK(VerifierSuiteFareyBall)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BoxOracleBfs(benchmark::State& state) {
  FareyBoxBfs box(state.range(0));
  Slope src{1, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(box.run(src));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BoxOracleBfs)->RangeMultiplier(2)->Range(125, 1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
