#include <benchmark/benchmark.h>

#include "latcov/census.hpp"
#include "latcov/genpos.hpp"
#include "latcov/oracle.hpp"

using namespace latcov;

namespace {

void BM_EnumeratePoints(benchmark::State& state) {
  Body ball = Body::ball(3, Rat(state.range(0)));
  for (auto _ : state) {
    auto pts = enumerate_points(ball, 1);
    benchmark::DoNotOptimize(pts.data());
  }
}
BENCHMARK(BM_EnumeratePoints)->Arg(4)->Arg(8)->Arg(16);

void BM_SuccessiveMinima(benchmark::State& state) {
  Body ball = Body::ball(3, Rat(state.range(0)));
  for (auto _ : state) {
    auto profile = successive_minima(ball);
    benchmark::DoNotOptimize(profile.minima.data());
  }
}
BENCHMARK(BM_SuccessiveMinima)->Arg(5)->Arg(10);

void BM_Census2(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = census(2, Rat(state.range(0)));
    benchmark::DoNotOptimize(rep.h_count.get_mpz_t());
  }
}
BENCHMARK(BM_Census2)->Arg(20)->Arg(40)->Arg(80);

void BM_Census3(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = census(3, Rat(state.range(0)));
    benchmark::DoNotOptimize(rep.h_count.get_mpz_t());
  }
}
BENCHMARK(BM_Census3)->Arg(4)->Arg(6);

void BM_LemmaLift(benchmark::State& state) {
  Body ball = Body::ball(2, Rat(60));
  Vec v = {Int(7), Int(11)};
  Int p(13);
  for (auto _ : state) {
    auto lift = lemma_lift(ball, v, p);
    benchmark::DoNotOptimize(lift.point.data());
  }
}
BENCHMARK(BM_LemmaLift);

void BM_BuildCover(benchmark::State& state) {
  Body ball = Body::ball(2, Rat(state.range(0)));
  for (auto _ : state) {
    auto cover = build_cover(ball);
    benchmark::DoNotOptimize(cover.hyperplanes.data());
  }
}
BENCHMARK(BM_BuildCover)->Arg(4)->Arg(8);

void BM_ExactCoverOracle(benchmark::State& state) {
  Body ball = Body::ball(2, Rat(state.range(0)));
  for (auto _ : state) {
    auto res = exact_g(ball);
    benchmark::DoNotOptimize(res.value.get_mpz_t());
  }
}
BENCHMARK(BM_ExactCoverOracle)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
