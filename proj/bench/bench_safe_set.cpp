// OpenMP safe-set kernel against the serial reference on the same inputs.

#include <benchmark/benchmark.h>

#include "evc/algorithms.hpp"
#include "evc/game.hpp"
#include "evc/generators.hpp"
#include "evc/reduction.hpp"

namespace {

using namespace evc;

// circular ladder: mvc = n, safe sets are large and need several sweeps
Graph ladder(std::size_t rungs) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < rungs; ++i) {
    std::size_t j = (i + 1) % rungs;
    e.emplace_back(i, j);
    e.emplace_back(rungs + i, rungs + j);
    e.emplace_back(i, rungs + i);
  }
  return Graph::with_default_ids(2 * rungs, e);
}

Graph random_instance(std::size_t n) {
  Rng rng(1234 + n);
  return random_connected_graph(n, 0.35, rng);
}

// reduced graph of a small dominating-set instance, played at ell guards
ReducedInstance reduced(std::size_t reds) {
  Rng rng(77);
  RbdsInstance inst;
  do inst = random_rbds(reds, 2, 1, 0.5, rng);
  while (preprocess_rbds(inst).outcome != Preprocessed::normalized);
  return ReducedInstance::build(inst, Variant::bipartite);
}

template <SafeSet (*Kernel)(const Graph&, std::size_t, const Budget&)>
void run(benchmark::State& state, const Graph& g, std::size_t k) {
  std::size_t members = 0;
  for (auto _ : state) {
    auto s = Kernel(g, k, Budget{});
    members = s.size();
    benchmark::DoNotOptimize(members);
  }
  state.counters["safe"] = static_cast<double>(members);
  state.counters["n"] = static_cast<double>(g.size());
}

SafeSet parallel(const Graph& g, std::size_t k, const Budget& b) { return safe_set(g, k, b); }
SafeSet serial(const Graph& g, std::size_t k, const Budget& b) { return safe_set_reference(g, k, b); }

void BM_LadderParallel(benchmark::State& state) {
  auto rungs = static_cast<std::size_t>(state.range(0));
  run<parallel>(state, ladder(rungs), rungs + 1);
}
void BM_LadderSerial(benchmark::State& state) {
  auto rungs = static_cast<std::size_t>(state.range(0));
  run<serial>(state, ladder(rungs), rungs + 1);
}

void BM_RandomParallel(benchmark::State& state) {
  auto g = random_instance(static_cast<std::size_t>(state.range(0)));
  run<parallel>(state, g, mvc_exact(g).size + 1);
}
void BM_RandomSerial(benchmark::State& state) {
  auto g = random_instance(static_cast<std::size_t>(state.range(0)));
  run<serial>(state, g, mvc_exact(g).size + 1);
}

void BM_ReducedParallel(benchmark::State& state) {
  auto ri = reduced(static_cast<std::size_t>(state.range(0)));
  run<parallel>(state, ri.graph(), ri.ell());
}
void BM_ReducedSerial(benchmark::State& state) {
  auto ri = reduced(static_cast<std::size_t>(state.range(0)));
  run<serial>(state, ri.graph(), ri.ell());
}

BENCHMARK(BM_LadderParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LadderSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomParallel)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSerial)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
