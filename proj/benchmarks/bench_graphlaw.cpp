#include <benchmark/benchmark.h>

#include "graphlaw/chordal.hpp"
#include "graphlaw/clique_stats.hpp"
#include "graphlaw/dag.hpp"
#include "graphlaw/dagoid.hpp"
#include "graphlaw/dagoid_law.hpp"
#include "graphlaw/enumerate.hpp"
#include "graphlaw/gaussian.hpp"
#include "graphlaw/mcmc.hpp"
#include "graphlaw/rng.hpp"

namespace {

using namespace graphlaw;

// Chordal band graph: i and j adjacent when |i - j| <= width.
UGraph band_graph(int n, int width) {
  UGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j <= i + width; ++j) g.add_edge(i, j);
  return g;
}

Dag band_dag(int n, int width) {
  Dag d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j <= i + width; ++j) d.add_arc(i, j);
  return d;
}

DataMatrix gaussian_data(int rows, int cols, std::uint64_t seed) {
  SplitMix64 rng(seed);
  DataMatrix x;
  x.n_obs = rows;
  x.n_cols = cols;
  for (int i = 0; i < rows * cols; ++i) x.values.push_back(rng.normal());
  return x;
}

void bm_is_chordal(benchmark::State& state) {
  UGraph g = band_graph(16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}

void bm_junction_tree(benchmark::State& state) {
  UGraph g = band_graph(16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(junction_tree(g));
}

void bm_clique_vector(benchmark::State& state) {
  UGraph g = band_graph(16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(clique_vector(g));
}

void bm_delta_t(benchmark::State& state) {
  UGraph g = band_graph(16, 3);
  for (auto _ : state) benchmark::DoNotOptimize(delta_t(g, {0, 1}));
}

void bm_d_clique_vector(benchmark::State& state) {
  Dag d = band_dag(12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(d_clique_vector(d));
}

void bm_enumerate_decomposable_6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_decomposable(6));
}

void bm_enumerate_dagoids_4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dagoids(4));
}

void bm_marginal_table_8(benchmark::State& state) {
  GaussHyper h(3.0, 8, [] {
    std::vector<double> phi(64, 0.0);
    for (int i = 0; i < 8; ++i) phi[static_cast<std::size_t>(i) * 8 + i] = 1.0;
    return phi;
  }());
  DataMatrix x = gaussian_data(50, 8, 11);
  for (auto _ : state) benchmark::DoNotOptimize(CliqueMarginalTable(h, x));
}

void bm_graph_log_marginal(benchmark::State& state) {
  GaussHyper h(3.0, 8, [] {
    std::vector<double> phi(64, 0.0);
    for (int i = 0; i < 8; ++i) phi[static_cast<std::size_t>(i) * 8 + i] = 1.0;
    return phi;
  }());
  CliqueMarginalTable table(h, gaussian_data(50, 8, 11));
  UGraph g = band_graph(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(graph_log_marginal(table, g));
}

void bm_run_chain(benchmark::State& state) {
  SubsetVector omega;
  for (auto _ : state) benchmark::DoNotOptimize(run_chain(omega, 6, 1000, 0, 7));
}

}  // namespace

BENCHMARK(bm_is_chordal);
BENCHMARK(bm_junction_tree);
BENCHMARK(bm_clique_vector);
BENCHMARK(bm_delta_t);
BENCHMARK(bm_d_clique_vector);
BENCHMARK(bm_enumerate_decomposable_6);
BENCHMARK(bm_enumerate_dagoids_4);
BENCHMARK(bm_marginal_table_8);
BENCHMARK(bm_graph_log_marginal);
BENCHMARK(bm_run_chain);

BENCHMARK_MAIN();
