#include <benchmark/benchmark.h>

#include <vector>

#include "padicres/ball.hpp"
#include "padicres/errors.hpp"
#include "padicres/exact_oracle.hpp"
#include "padicres/experiments.hpp"
#include "padicres/poly.hpp"
#include "padicres/prs.hpp"
#include "padicres/rng.hpp"

using namespace padicres;

namespace {

struct Pair {
  ExactPoly a, b;
};

std::vector<Pair> pairs(const Ring& ring, int d, int64_t n, int count) {
  Rng rng(2024);
  std::vector<Pair> out;
  for (int i = 0; i < count; ++i) {
    ExactPoly a = random_monic(ring, d, n, rng);
    ExactPoly b = random_monic(ring, d, n, rng);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

void BM_BallMul(benchmark::State& state) {
  const Ring ring(2);
  const int64_t n = state.range(0);
  Rng rng(1);
  const Ball x(ring, mpz_class(rng.below(1u << 30)), n), y(ring, mpz_class(rng.below(1u << 30)), n);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_BallMul)->Arg(32)->Arg(128)->Arg(1024);

void BM_BallDiv(benchmark::State& state) {
  const Ring ring(2);
  const int64_t n = state.range(0);
  const Ball x(ring, 12345, n), y(ring, 54321, n);
  for (auto _ : state) benchmark::DoNotOptimize(x / y);
}
BENCHMARK(BM_BallDiv)->Arg(32)->Arg(128)->Arg(1024);

void BM_PrsBall(benchmark::State& state) {
  const Ring ring(2);
  const int d = static_cast<int>(state.range(0));
  const auto ps = pairs(ring, d, 128, 16);
  size_t i = 0;
  for (auto _ : state) {
    const Pair& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(prs_ball(to_balls_monic(p.a, ring, 128), to_balls_monic(p.b, ring, 128)));
  }
}
BENCHMARK(BM_PrsBall)->Arg(5)->Arg(10)->Arg(25)->Arg(50);

void BM_Stabilized(benchmark::State& state) {
  const Ring ring(2);
  const int d = static_cast<int>(state.range(0));
  const auto ps = pairs(ring, d, 20, 64);
  size_t i = 0;
  for (auto _ : state) {
    const Pair& p = ps[i++ % ps.size()];
    try {
      benchmark::DoNotOptimize(stabilized_prs(to_balls_monic(p.a, ring, 20), to_balls_monic(p.b, ring, 20), 20));
    } catch (const HypothesisHViolated&) {
    }
  }
}
BENCHMARK(BM_Stabilized)->Arg(5)->Arg(10);

void BM_OracleCollins(benchmark::State& state) {
  const Ring ring(2);
  const int d = static_cast<int>(state.range(0));
  const auto ps = pairs(ring, d, 128, 16);
  size_t i = 0;
  for (auto _ : state) {
    const Pair& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(prs_general(p.a, p.b));
  }
}
BENCHMARK(BM_OracleCollins)->Arg(10)->Arg(25)->Arg(50);

void BM_OracleMinors(benchmark::State& state) {
  const Ring ring(2);
  const int d = static_cast<int>(state.range(0));
  const auto ps = pairs(ring, d, 128, 4);
  size_t i = 0;
  for (auto _ : state) {
    const Pair& p = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(subresultants_minors(p.a, p.b, d, d));
  }
}
BENCHMARK(BM_OracleMinors)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
