#include <benchmark/benchmark.h>

#include "uglov/crystal.hpp"
#include "uglov/isomorphism.hpp"
#include "uglov/labeling.hpp"

using namespace uglov;

namespace {

void BM_GSequence(benchmark::State& state) {
  const Multipartition lambda({{5, 5, 3, 1}, {3, 1}});
  const Charge charge({1, 0}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(g_sequence(lambda, charge));
}
BENCHMARK(BM_GSequence);

void BM_Enumerate(benchmark::State& state) {
  const Charge charge({0, 1, 3}, 4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_uglov(charge, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 10, 2);

void BM_TransferSigma(benchmark::State& state) {
  const Multipartition lambda({{5, 5, 3, 1}, {3, 1}});
  const std::vector<int> s{1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(chi_sigma(lambda, s, 1));
}
BENCHMARK(BM_TransferSigma);

void BM_TransferGeneric(benchmark::State& state) {
  const Multipartition lambda({{5, 5, 3, 1}, {3, 1}});
  const std::vector<int> s{1, 0}, target{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(chi_generic(lambda, s, target, 7));
}
BENCHMARK(BM_TransferGeneric);

const Charge kFour({3, 0, 7, 3}, 4);

void BM_LabelGeneral(benchmark::State& state) {
  const OneDimRep rep{OneDimRep::Kind::Sign, 2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(label_general(rep, kFour));
}
BENCHMARK(BM_LabelGeneral)->Arg(8)->Arg(16)->Arg(32);

void BM_LabelClosed(benchmark::State& state) {
  const OneDimRep rep{OneDimRep::Kind::Sign, 2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(label_sign_closed(rep, kFour));
}
BENCHMARK(BM_LabelClosed)->Arg(8)->Arg(16)->Arg(32);

void BM_LabelTypeB(benchmark::State& state) {
  const OneDimRep rep{OneDimRep::Kind::Sign, 2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(label_typeB(rep, 0, 1, 3));
}
BENCHMARK(BM_LabelTypeB)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
