#include <benchmark/benchmark.h>

#include <random>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/fault_model.hpp"
#include "ltqdiag/graph.hpp"
#include "ltqdiag/syndrome.hpp"

using namespace ltqdiag;

namespace {

void BM_NeighborQuery(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(static_cast<int>(state.range(0)));
  uint32_t v = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.neighbor_labels(v));
    v = (v * 2654435761u + 1) & static_cast<uint32_t>(g.vertex_count() - 1);
  }
}
BENCHMARK(BM_NeighborQuery)->Arg(10)->Arg(16)->Arg(24);

void BM_PmcSyndrome(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(static_cast<int>(state.range(0)));
  VertexSet fault(g.vertex_count());
  for (uint64_t v = 0; v < g.vertex_count(); v += 5) fault.add(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pmc_syndrome(g, fault, FaultyUnitPolicy::random(1)));
  }
}
BENCHMARK(BM_PmcSyndrome)->Arg(8)->Arg(10);

void BM_MmSyndrome(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(static_cast<int>(state.range(0)));
  VertexSet fault(g.vertex_count());
  for (uint64_t v = 0; v < g.vertex_count(); v += 5) fault.add(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mm_syndrome(g, fault, FaultyUnitPolicy::random(1)));
  }
}
BENCHMARK(BM_MmSyndrome)->Arg(8)->Arg(10);

void BM_DistinguishablePairPmc(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(4);
  std::mt19937_64 rng(17);
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (int i = 0; i < 256; ++i) {
    VertexSet a(16), b(16);
    for (uint32_t v = 0; v < 16; ++v) {
      if (rng() & 1) a.add(v);
      if (rng() & 1) b.add(v);
    }
    if (a == b) b.add(0);
    if (a == b) continue;
    pairs.emplace_back(a, b);
  }
  size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(distinguishable_pmc(g, a, b));
  }
}
BENCHMARK(BM_DistinguishablePairPmc);

void BM_KappaSearch(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(5);
  const SearchOptions opts{1'000'000'000, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa_g(g, 1, 9, opts));
  }
}
BENCHMARK(BM_KappaSearch)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_GngEnumeration(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(4);
  for (auto _ : state) {
    GngSetStream stream(g, 1, 7);
    size_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_GngEnumeration)->Unit(benchmark::kMillisecond);

void BM_TgBruteForce(benchmark::State& state) {
  const LtqGraph g = LtqGraph::build(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tg_bruteforce(g, 2, Model::MmStar, 8));
  }
}
BENCHMARK(BM_TgBruteForce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
