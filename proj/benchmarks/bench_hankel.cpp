#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "hankelmu/hankel.hpp"
#include "hankelmu/measures.hpp"

namespace {

using hankelmu::HankelOp;
using hankelmu::Measure;

std::vector<double> random_input(std::size_t n) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> a(n);
  for (auto& v : a) v = dist(rng);
  return a;
}

const HankelOp& hilbert_op(std::size_t n) {
  static std::map<std::size_t, HankelOp> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, HankelOp::from_measure(Measure::lebesgue(), n)).first;
  return it->second;
}

void BM_ApplyNaive(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto& H = hilbert_op(n);
  const auto a = random_input(n);
  for (auto _ : state) benchmark::DoNotOptimize(H.apply_naive(a));
  state.SetComplexityN(n);
}

void BM_ApplyFast(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto& H = hilbert_op(n);
  const auto a = random_input(n);
  for (auto _ : state) benchmark::DoNotOptimize(H.apply_fast(a));
  state.SetComplexityN(n);
}

void BM_TopSingularValue(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto& H = hilbert_op(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(hankelmu::top_singular_value(H, 1e-9));
}

BENCHMARK(BM_ApplyNaive)->RangeMultiplier(4)->Range(64, 8192)->Complexity();
BENCHMARK(BM_ApplyFast)->RangeMultiplier(4)->Range(64, 1 << 20)->Complexity();
BENCHMARK(BM_TopSingularValue)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
