#include <random>

#include <benchmark/benchmark.h>

#include "solenoid/box.hpp"
#include "solenoid/partition.hpp"
#include "solenoid/point.hpp"

using namespace solenoid;

namespace {

void BM_RationalSmall(benchmark::State& state) {
  const Rational a(Integer(355), Integer(113)), b(Integer(-22), Integer(7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RationalSmall);

void BM_RationalBig(benchmark::State& state) {
  const Rational a(pow(Integer(6), 40) + 1, pow(Integer(7), 30));
  const Rational b(pow(Integer(5), 33), pow(Integer(2), 90) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RationalBig);

void BM_Act(benchmark::State& state) {
  const SolenoidPoint x(Rational(Integer(5), Integer(7)), Rational(Integer(2), Integer(9)), Rational(Integer(3), Integer(4)));
  const auto a = state.range(0), b = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(act(x, a, b));
}
BENCHMARK(BM_Act)->Args({1, 1})->Args({-1, 1})->Args({5, -3});

void BM_ImageAtom(benchmark::State& state) {
  const auto a = state.range(0), b = state.range(1);
  const BoxSet atom = xi(a, b).atoms[0];
  for (auto _ : state) benchmark::DoNotOptimize(image(atom, a, b));
}
BENCHMARK(BM_ImageAtom)->Args({1, 1})->Args({-1, 1})->Args({2, -1})->Args({-2, -3});

void BM_OrbitJoin(benchmark::State& state) {
  const auto a = state.range(0), b = state.range(1);
  const int n = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_join(a, b, -n, n, 10'000'000));
}
BENCHMARK(BM_OrbitJoin)->Args({1, 1, 1})->Args({1, 1, 2})->Args({-1, 1, 2})->Unit(benchmark::kMillisecond);

void BM_OrbitJoinReport(benchmark::State& state) {
  const auto a = state.range(0), b = state.range(1);
  const int n = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_join_report(a, b, -n, n, 10'000'000));
}
BENCHMARK(BM_OrbitJoinReport)->Args({1, 1, 3})->Args({2, -1, 3})->Unit(benchmark::kMillisecond);

void BM_Markov(benchmark::State& state) {
  const auto a = state.range(0), b = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(markov_check(a, b, 2, 10'000'000));
}
BENCHMARK(BM_Markov)->Args({1, 1})->Args({-1, 1})->Args({1, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
