#include "graphlie/graph_enumeration.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "graphlie/canonical.hpp"
#include "graphlie/errors.hpp"

namespace graphlie {

namespace {

int max_edges(int v) { return v * (v - 1) / 2; }

// All canonical forms reachable from the given representatives by adding one
// edge. Workers share nothing and the per-worker sets merge into one set, so
// the result is independent of the chunking.
std::vector<Graph> expand_layer(const std::vector<Graph>& reps, int jobs) {
  auto successors = [](const Graph& g, std::set<Graph>& out) {
    int n = g.n_vertices();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges().size() + 1);
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(0, 0);  // slot for the new edge
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        pairs.back() = {u, v};
        out.insert(canonical_form(Graph::from_edges(n, pairs)).canonical_graph);
      }
  };

  std::set<Graph> merged;
  if (jobs <= 1 || reps.size() < 2) {
    for (const Graph& g : reps) successors(g, merged);
  } else {
    int workers = std::min<int>(jobs, int(reps.size()));
    std::vector<std::set<Graph>> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < reps.size(); i += workers)
          successors(reps[i], partial[w]);
      });
    for (std::thread& t : pool) t.join();
    for (std::set<Graph>& p : partial) merged.merge(p);
  }
  return std::vector<Graph>(merged.begin(), merged.end());
}

}  // namespace

GraphEnumerator::GraphEnumerator(EnumerationOptions opts) : opts_(opts) {
  if (opts_.max_vertices < 1 || opts_.max_vertices > 64)
    throw OutOfBoundsError("vertex bound must be in [1, 64], got " +
                           std::to_string(opts_.max_vertices));
  if (opts_.jobs < 1)
    throw OutOfBoundsError("job count must be >= 1, got " +
                           std::to_string(opts_.jobs));
}

const std::vector<Graph>& GraphEnumerator::classes(int n_vertices,
                                                   int n_edges) {
  std::lock_guard<std::mutex> lock(mu_);
  if (n_vertices < 1 || n_vertices > opts_.max_vertices)
    throw OutOfBoundsError("vertex count " + std::to_string(n_vertices) +
                           " outside [1, " + std::to_string(opts_.max_vertices) +
                           "]");
  int cap = max_edges(n_vertices);
  if (n_edges < 0 || n_edges > cap)
    throw OutOfBoundsError("edge count " + std::to_string(n_edges) +
                           " outside [0, " + std::to_string(cap) + "] for " +
                           std::to_string(n_vertices) + " vertices");
  // Layers are grown by edge-by-edge augmentation, so a dense target is
  // cheapest as the complement of a sparse one.
  if (2 * n_edges > cap) {
    auto key = std::make_pair(n_vertices, n_edges);
    auto it = complement_cache_.find(key);
    if (it != complement_cache_.end()) return it->second;
    std::vector<Graph> out;
    for (const Graph& g : layer_locked(n_vertices, cap - n_edges))
      out.push_back(canonical_form(g.complement()).canonical_graph);
    std::sort(out.begin(), out.end());
    return complement_cache_.emplace(key, std::move(out)).first->second;
  }
  return layer_locked(n_vertices, n_edges);
}

const std::vector<Graph>& GraphEnumerator::layer_locked(int v, int e) {
  std::vector<std::vector<Graph>>& layers = layers_[v];
  if (layers.empty()) {
    // push_back never reallocates after this, so returned references stay
    // valid across later growth.
    layers.reserve(max_edges(v) + 1);
    layers.push_back({Graph::from_edges(v, {})});
  }
  while (int(layers.size()) <= e)
    layers.push_back(expand_layer(layers.back(), opts_.jobs));
  return layers[e];
}

std::vector<Graph> enumerate_graphs(int n_vertices, int n_edges,
                                    const EnumerationOptions& opts) {
  GraphEnumerator en(opts);
  return en.classes(n_vertices, n_edges);
}

}  // namespace graphlie
