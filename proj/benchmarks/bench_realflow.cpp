#include <benchmark/benchmark.h>

#include "nahmrat/realflow.hpp"
#include "nahmrat/rng.hpp"

using namespace nahmrat;
using namespace nahmrat::realflow;

namespace {

void BM_solve_real_bvp(benchmark::State& state) {
  Rng rng(21);
  using cd = std::complex<double>;
  const int m = 2;
  auto rand_pd = [&] {
    CMat a(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = cd(2 * rng.real01() - 1, 2 * rng.real01() - 1);
    return CMat(a * a.adjoint() + 0.4 * CMat::Identity(m, m));
  };
  CMat beta0(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) beta0(i, j) = cd(2 * rng.real01() - 1, 2 * rng.real01() - 1);
  CMat hm = rand_pd(), hp = rand_pd();
  int grid = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_real_bvp(beta0, hm, hp, grid, 1e-6));
}

void BM_residual_eval(benchmark::State& state) {
  Rng rng(23);
  const int grid = static_cast<int>(state.range(0)), m = 2;
  HPath hp;
  hp.length = 1.0;
  using cd = std::complex<double>;
  for (int i = 0; i <= grid; ++i) {
    CMat a(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) a(r, c) = cd(2 * rng.real01() - 1, 2 * rng.real01() - 1);
    hp.h.push_back(CMat(a * a.adjoint() + CMat::Identity(m, m)));
  }
  CMat beta0 = CMat::Identity(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(residual_F(pair_from_h(hp, beta0)));
}

}  // namespace

BENCHMARK(BM_solve_real_bvp)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_residual_eval)->Arg(200);
