// Serial reference vs OpenMP kernel on the same inputs. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <map>

#include "cksrank/baselines.hpp"
#include "cksrank/cks.hpp"
#include "cksrank/community.hpp"
#include "cksrank/diffusion.hpp"
#include "cksrank/generators.hpp"
#include "cksrank/kshell.hpp"

using namespace cksrank;

namespace {

const Graph& graph_for(std::int64_t n) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, generate_powerlaw_cluster(static_cast<std::size_t>(n), 5, 0.3, 7)).first;
  }
  return it->second;
}

template <auto Kernel>
void run_scores(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

void BM_BetweennessSerial(benchmark::State& s) { run_scores<&betweenness_scores_serial>(s); }
void BM_BetweennessParallel(benchmark::State& s) { run_scores<&betweenness_scores>(s); }
void BM_ClosenessSerial(benchmark::State& s) { run_scores<&closeness_scores_serial>(s); }
void BM_ClosenessParallel(benchmark::State& s) { run_scores<&closeness_scores>(s); }

template <bool Parallel>
void BM_MonteCarlo(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  auto seeds = select_seeds(degree_centrality(g), 0.03, g.node_count()).seeds;
  for (auto _ : state) {
    auto summary = Parallel ? ic_monte_carlo(g, seeds, 0.1, 200, 1)
                            : ic_monte_carlo_serial(g, seeds, 0.1, 200, 1);
    benchmark::DoNotOptimize(summary.mean);
  }
}

template <bool Parallel>
void BM_CommunityKshell(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  const auto p = louvain(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? community_kshell(g, p) : community_kshell_serial(g, p));
  }
}

template <bool Parallel>
void BM_CksScores(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0));
  const auto p = louvain(g, 1);
  const auto shells = community_kshell(g, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? cks_scores(g, p, shells) : cks_scores_serial(g, p, shells));
  }
}

}  // namespace

BENCHMARK(BM_BetweennessSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BetweennessParallel)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosenessSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosenessParallel)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarlo<false>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo<true>)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CommunityKshell<false>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommunityKshell<true>)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CksScores<false>)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CksScores<true>)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
