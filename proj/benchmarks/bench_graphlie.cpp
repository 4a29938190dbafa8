// Microbenchmarks for the hot paths: canonical labeling, per-dimension
// enumeration, algebra construction, bracket arithmetic, invariants, and the
// full isomorphism decision.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "graphlie/algebra.hpp"
#include "graphlie/canonical.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/graph_enumeration.hpp"
#include "graphlie/invariants.hpp"
#include "graphlie/morphisms.hpp"

namespace {

using namespace graphlie;

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

std::vector<int> shuffled_labels(int n, unsigned seed) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

LieElement dense_element(const GraphLieAlgebra& a, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::map<int, Rational> coords;
  for (int k = 0; k < a.dimension(); ++k)
    coords[k] = make_rational(num(rng), den(rng));
  return a.element_from_coords(std::move(coords));
}

void BM_CanonicalFormPath(benchmark::State& state) {
  Graph g = path_graph(int(state.range(0))).relabeled(
      shuffled_labels(int(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPath)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalFormComplete(benchmark::State& state) {
  Graph g = complete_graph(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormComplete)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalFormRandom(benchmark::State& state) {
  Graph g = random_graph(int(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(16)->Arg(32);

// One full vertex layer: every isomorphism class on exactly v vertices.
void BM_EnumerateClasses(benchmark::State& state) {
  int v = int(state.range(0));
  for (auto _ : state) {
    GraphEnumerator en({v, 1});
    size_t total = 0;
    for (int e = 0; e <= v * (v - 1) / 2; ++e) total += en.classes(v, e).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(5)->Arg(6)->Arg(7);

void BM_BuildAlgebra(benchmark::State& state) {
  Graph g = complete_graph(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(g));
}
BENCHMARK(BM_BuildAlgebra)->Arg(4)->Arg(8)->Arg(12);

void BM_Bracket(benchmark::State& state) {
  GraphLieAlgebra a = build_algebra(complete_graph(int(state.range(0))));
  LieElement x = dense_element(a, 1), y = dense_element(a, 2);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_Bracket)->Arg(4)->Arg(8)->Arg(12);

void BM_InvariantVector(benchmark::State& state) {
  GraphLieAlgebra a = build_algebra(random_graph(int(state.range(0)), 13));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_vector(a));
}
BENCHMARK(BM_InvariantVector)->Arg(4)->Arg(6)->Arg(8);

void BM_AlgebrasIsomorphic(benchmark::State& state) {
  Graph g = random_graph(int(state.range(0)), 17);
  Graph h = g.relabeled(shuffled_labels(int(state.range(0)), 19));
  GraphLieAlgebra a = build_algebra(g), b = build_algebra(h);
  for (auto _ : state) benchmark::DoNotOptimize(algebras_isomorphic(a, b));
}
BENCHMARK(BM_AlgebrasIsomorphic)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
