#ifndef GRAPHLIE_GRAPH_ENUMERATION_HPP
#define GRAPHLIE_GRAPH_ENUMERATION_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "graphlie/graph.hpp"

namespace graphlie {

inline constexpr int kDefaultMaxVertices = 8;

struct EnumerationOptions {
  int max_vertices = kDefaultMaxVertices;
  int jobs = 1;  // worker threads for candidate expansion
};

/// Enumerates isomorphism classes of graphs, one canonical representative per
/// class, caching per-vertex-count layers across calls. Results are
/// deterministic regardless of the job count.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(EnumerationOptions opts = {});

  // One representative per isomorphism class with the given vertex and edge
  // counts, sorted by canonical form. Throws OutOfBoundsError when n_vertices
  // exceeds the configured bound or n_edges is outside [0, C(n_vertices, 2)].
  const std::vector<Graph>& classes(int n_vertices, int n_edges);

  const EnumerationOptions& options() const { return opts_; }

 private:
  const std::vector<Graph>& layer_locked(int v, int e);

  EnumerationOptions opts_;
  std::mutex mu_;
  std::map<int, std::vector<std::vector<Graph>>> layers_;
  std::map<std::pair<int, int>, std::vector<Graph>> complement_cache_;
};

std::vector<Graph> enumerate_graphs(int n_vertices, int n_edges,
                                    const EnumerationOptions& opts = {});

}  // namespace graphlie

#endif
