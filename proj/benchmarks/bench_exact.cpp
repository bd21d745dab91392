#include <benchmark/benchmark.h>

#include "nahmrat/mat.hpp"
#include "nahmrat/rng.hpp"

using namespace nahmrat;

namespace {

Mat random_square(int n, std::uint64_t seed) {
  Rng rng(seed);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.small_gauss(2);
  return m;
}

void BM_charpoly_adjugate(benchmark::State& state) {
  Mat m = random_square(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_adjugate(m));
}

void BM_det_bareiss(benchmark::State& state) {
  Mat m = random_square(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}

void BM_nullspace(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Mat m = random_square(n, 13);
  for (int j = 0; j < n; ++j) m(n - 1, j) = m(0, j);  // force a kernel
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}

}  // namespace

BENCHMARK(BM_charpoly_adjugate)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_det_bareiss)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_nullspace)->Arg(6)->Arg(12);
