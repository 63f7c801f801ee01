#include <benchmark/benchmark.h>

#include <random>

#include "hmoduli/latin.hpp"
#include "hmoduli/linalg.hpp"
#include "hmoduli/moduli.hpp"

namespace {

using namespace hmoduli;

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> dist(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

void BM_ModuliReport(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto p = ExtensionProblem::eilenberg_maclane(2 * k, 2);
    benchmark::DoNotOptimize(moduli_report(p));
  }
}
BENCHMARK(BM_ModuliReport)->Arg(4)->Arg(8)->Arg(10);

void BM_ClosedFormCheck(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_check(k, 2));
}
BENCHMARK(BM_ClosedFormCheck)->Arg(6)->Arg(10);

void BM_EnumerateLoops(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_loops(order));
}
BENCHMARK(BM_EnumerateLoops)->Arg(5)->Arg(6);

void BM_ImplicationSurvey(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(implication_survey(order));
}
BENCHMARK(BM_ImplicationSurvey)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
