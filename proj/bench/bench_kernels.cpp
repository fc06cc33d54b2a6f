#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rpseq/characterize.hpp"
#include "rpseq/search.hpp"

namespace {

using namespace rpseq;

SequenceSpec quadratic_spec() {
  const int bits = 128;
  const Complex one(1.0, 0.0, bits);
  const Complex mid(Real(1L, bits) - sqrt(Real(3L, bits)), Real(bits));
  return SequenceSpec(Polynomial({one, mid, one}), Polynomial({Complex(bits), Complex(bits), Complex(-0.5, 0.0, bits)}),
                      Polynomial({Complex(bits), one}));
}

std::vector<Polynomial> zero_set_input(int nmax) {
  auto w = expand_wn(quadratic_spec(), nmax);
  w.erase(w.begin());
  return w;
}

std::vector<Complex> random_points(int count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) out.emplace_back(box(rng), box(rng), 128);
  return out;
}

void BM_ZeroSetsSerial(benchmark::State& state) {
  const auto polys = zero_set_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_zero_sets_serial(polys, 1, PrecisionConfig{}));
}

void BM_ZeroSetsParallel(benchmark::State& state) {
  const auto polys = zero_set_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_zero_sets(polys, 1, PrecisionConfig{}));
}

void BM_ClassifySerial(benchmark::State& state) {
  const SequenceSpec spec = quadratic_spec();
  const auto points = random_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_points_serial(spec, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const SequenceSpec spec = quadratic_spec();
  const auto points = random_points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_points(spec, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ZeroSetsSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ZeroSetsParallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifySerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
