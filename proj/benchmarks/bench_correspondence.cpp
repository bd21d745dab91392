#include <benchmark/benchmark.h>

#include "nahmrat/flags.hpp"
#include "nahmrat/generate.hpp"
#include "nahmrat/su2.hpp"

using namespace nahmrat;

namespace {

void BM_to_rational_map(benchmark::State& state) {
  Rng rng(3);
  ChargeVector k({static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)) / 2});
  MatrixPair p = random_valid_pair(rng, k, true);
  for (auto _ : state) benchmark::DoNotOptimize(to_rational_map(p));
}

void BM_holomorphic_charge(benchmark::State& state) {
  Rng rng(5);
  ChargeVector k({static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)) / 2});
  RationalMapData f = random_based_map(rng, k);
  for (auto _ : state) benchmark::DoNotOptimize(holomorphic_charge(f));
}

void BM_minimal_syzygy_basis(benchmark::State& state) {
  Rng rng(7);
  ChargeVector k({static_cast<int>(state.range(0)) / 2, static_cast<int>(state.range(0)) / 2});
  RationalMapData f = random_based_map(rng, k);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_syzygy_basis(f));
}

void BM_to_hurtubise_form(benchmark::State& state) {
  Rng rng(9);
  ChargeVector k({3, 3, 2});
  Mat b = hurtubise_block_B(random_c_pattern(rng, k), k);
  for (auto _ : state) benchmark::DoNotOptimize(to_hurtubise_form(b, k));
}

void BM_casimir_check(benchmark::State& state) {
  int a = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(casimir_spectrum_check(a, a));
}

}  // namespace

BENCHMARK(BM_to_rational_map)->Arg(6)->Arg(8);
BENCHMARK(BM_holomorphic_charge)->Arg(6)->Arg(8);
BENCHMARK(BM_minimal_syzygy_basis)->Arg(6);
BENCHMARK(BM_to_hurtubise_form);
BENCHMARK(BM_casimir_check)->Arg(2)->Arg(4);
