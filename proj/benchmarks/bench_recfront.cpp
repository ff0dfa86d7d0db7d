#include <benchmark/benchmark.h>

#include <vector>

#include "recfront/exact_expectations.hpp"
#include "recfront/generators.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/record_set.hpp"
#include "recfront/rng.hpp"
#include "recfront/statistics.hpp"

using namespace recfront;

namespace {

void BM_insert(benchmark::State& state, InsertAlgorithm algo, int d) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(n * static_cast<std::size_t>(d));
  auto eng = replication_engine(1, 0);
  for (double& v : xs) v = sample_exponential(eng);
  for (auto _ : state) {
    RecordSet rs(static_cast<std::size_t>(d), TiePolicy::Strict, algo);
    for (std::size_t i = 0; i < n; ++i)
      benchmark::DoNotOptimize(rs.insert(std::span<const double>(&xs[i * d], d)));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_all_generators(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto eng = replication_engine(2, static_cast<std::uint64_t>(d));
  RecordSet rs(static_cast<std::size_t>(d));
  for (int i = 0; i < n; ++i) rs.insert(sample_point(eng, d));
  for (auto _ : state) benchmark::DoNotOptimize(all_generators(rs).gamma());
}

void BM_rho_truncated_quadrature(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  const double b = std::log(static_cast<double>(n)) - 1.5;
  for (auto _ : state) benchmark::DoNotOptimize(expected_rho_truncated(3, n, b).value);
}

void BM_iota_quadrature(benchmark::State& state) {
  const auto n = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iota_quadrature(4, n).value);
}

void BM_stat_merge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto eng = replication_engine(3, 0);
  std::vector<double> a(n), b(n);
  for (double& v : a) v = sample_exponential(eng);
  for (double& v : b) v = sample_exponential(eng);
  const StatAggregate sa = StatAggregate::from_samples(a);
  const StatAggregate sb = StatAggregate::from_samples(b);
  for (auto _ : state) benchmark::DoNotOptimize(StatAggregate::merged(sa, sb).mean());
}

void BM_replication(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.d = 3;
  cfg.n_checkpoints = {static_cast<std::int64_t>(state.range(0))};
  cfg.replications = 1;
  cfg.master_seed = 4;
  std::uint64_t rep = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_replication(cfg, rep++).checkpoints.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_insert, linear_d2, InsertAlgorithm::LinearScan, 2)->Arg(100000);
BENCHMARK_CAPTURE(BM_insert, sorted_d2, InsertAlgorithm::SortedD2, 2)->Arg(100000);
BENCHMARK_CAPTURE(BM_insert, linear_d3, InsertAlgorithm::LinearScan, 3)->Arg(100000);
BENCHMARK_CAPTURE(BM_insert, linear_d4, InsertAlgorithm::LinearScan, 4)->Arg(100000);
BENCHMARK(BM_all_generators)->Args({3, 1000})->Args({4, 1000})->Args({3, 100000});
BENCHMARK(BM_rho_truncated_quadrature)->Arg(1000)->Arg(100000)->Arg(10000000);
BENCHMARK(BM_iota_quadrature)->Arg(50)->Arg(5000);
BENCHMARK(BM_stat_merge)->Arg(10000)->Arg(100000);
BENCHMARK(BM_replication)->Arg(10000);

BENCHMARK_MAIN();
