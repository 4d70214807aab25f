#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>

#include "grgraph/analysis.hpp"
#include "grgraph/constructions.hpp"
#include "grgraph/graph.hpp"
#include "grgraph/theorems.hpp"
#include "grgraph_cli/instance.hpp"

namespace {

using namespace grgraph;

Instance corpus(const std::string& stem) {
  return cli::load_instance(std::filesystem::path(GRGRAPH_CORPUS_DIR) / (stem + ".json"));
}

Graph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_LeftIdeals(benchmark::State& state, const char* stem) {
  const Instance inst = corpus(stem);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_left_ideals(inst.ring()));
}
BENCHMARK_CAPTURE(BM_LeftIdeals, z12, "z12");
BENCHMARK_CAPTURE(BM_LeftIdeals, z4xz4, "z4xz4");
BENCHMARK_CAPTURE(BM_LeftIdeals, f2_d3, "f2_d3");
BENCHMARK_CAPTURE(BM_LeftIdeals, z8_id_z8, "z8_id_z8");

void BM_GradedIdeals(benchmark::State& state, const char* stem) {
  const Instance inst = corpus(stem);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_left_ideals(inst.grading));
}
BENCHMARK_CAPTURE(BM_GradedIdeals, z8_c2, "z8_c2");
BENCHMARK_CAPTURE(BM_GradedIdeals, z8_id_z8, "z8_id_z8");

void BM_CliqueNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32)->Arg(48);

void BM_DominationNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(domination_number(g));
}
BENCHMARK(BM_DominationNumber)->Arg(16)->Arg(24)->Arg(32);

void BM_Planarity(benchmark::State& state) {
  // Sparse enough to get past the edge bound.
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 2.5 / static_cast<double>(n), 17);
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_Planarity)->Arg(16)->Arg(32)->Arg(64);

void BM_RunAll(benchmark::State& state, const char* stem) {
  const Instance inst = corpus(stem);
  for (auto _ : state) {
    Analysis a(inst);
    benchmark::DoNotOptimize(run_all(a));
  }
}
BENCHMARK_CAPTURE(BM_RunAll, z12, "z12")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunAll, f2_xy, "f2_xy")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunAll, z8_id_z8, "z8_id_z8")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
