#include <benchmark/benchmark.h>

#include "qprofile/fforacle.hpp"
#include "qprofile/profiles.hpp"
#include "qprofile/tableaux.hpp"

using namespace qprofile;

static void BM_QBinomial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_binomial(n, n / 2).degree());
  }
}
BENCHMARK(BM_QBinomial)->Arg(20)->Arg(40);

static void BM_KostkaFoulkesTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto parts = partitions_of(n);
  for (auto _ : state) {
    PolyT acc;
    for (const auto& lam : parts) {
      for (const auto& mu : parts) acc += kostka_foulkes(lam, mu);
    }
    benchmark::DoNotOptimize(acc.degree());
  }
}
BENCHMARK(BM_KostkaFoulkesTable)->Arg(5)->Arg(7);

static void BM_FlagGF(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto types = all_types_of_size(n);
  for (auto _ : state) {
    for (const auto& tau : types) {
      benchmark::DoNotOptimize(flag_gf(tau).schur_coeffs().size());
    }
  }
}
BENCHMARK(BM_FlagGF)->Arg(4)->Arg(5);

static void BM_SigmaSymbolic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SimilarityType tau({{1, Partition{n}}});
  auto mus = partitions_up_to(n, IdealBound::inclusive);
  for (auto _ : state) {
    PolyT acc;
    for (const auto& mu : mus) acc += sigma(mu, tau);
    benchmark::DoNotOptimize(acc.degree());
  }
}
BENCHMARK(BM_SigmaSymbolic)->Arg(4)->Arg(6);

static void BM_SubspaceEnumeration(benchmark::State& state) {
  long long p = state.range(0);
  int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subspaces(p, n).size());
  }
}
BENCHMARK(BM_SubspaceEnumeration)->Args({2, 4})->Args({3, 4});

static void BM_SigmaOracle(benchmark::State& state) {
  FpMatrix delta = build_matrix_of_type(SimilarityType({{1, Partition{3, 1}}}), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_bruteforce(Partition{1, 1, 1, 1}, delta));
  }
}
BENCHMARK(BM_SigmaOracle);

static void BM_KrylovProb(benchmark::State& state) {
  SimilarityType tau({{1, Partition{2, 1}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(krylov_prob(2, 2, tau).to_string().size());
  }
}
BENCHMARK(BM_KrylovProb);

BENCHMARK_MAIN();
