#include <benchmark/benchmark.h>

#include "hecke/hmodule.hpp"
#include "hecke/realside.hpp"
#include "hecke/verify.hpp"

namespace {

using hecke::Scalar;
using hecke::Segment;

std::vector<Segment> points(std::size_t m) {
  std::vector<Segment> out;
  for (std::size_t k = 0; k < m; ++k) {
    const Scalar x(static_cast<long>(k % 3));
    out.push_back(Segment::make(x, x));
  }
  return out;
}

void BM_SteinbergProductOfPoints(benchmark::State& state) {
  const auto segs = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::steinberg_product(segs));
}
BENCHMARK(BM_SteinbergProductOfPoints)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_GammaModule(benchmark::State& state) {
  const auto m = state.range(0);
  const hecke::Weight w({Scalar(m / 2), Scalar(m - m / 2)}, {Scalar(0), Scalar(0)});
  for (auto _ : state) benchmark::DoNotOptimize(hecke::gamma_module(w));
}
BENCHMARK(BM_GammaModule)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Jacquet(benchmark::State& state) {
  const auto mod = hecke::steinberg_product(points(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::jacquet(mod, Scalar(0)));
}
BENCHMARK(BM_Jacquet)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_KGroupCommutativity(benchmark::State& state) {
  const hecke::Weight w({Scalar(2), Scalar(1), Scalar(3), Scalar(2)}, {Scalar(0), Scalar(0), Scalar(1), Scalar(1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hecke::verify_kgroup_commutativity(w, 1, hecke::Direction::RaiseRight));
  }
}
BENCHMARK(BM_KGroupCommutativity)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  hecke::SuiteConfig config;
  config.case_count = 20;
  for (auto _ : state) benchmark::DoNotOptimize(hecke::run_suite(config));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
