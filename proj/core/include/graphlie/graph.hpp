#ifndef GRAPHLIE_GRAPH_HPP
#define GRAPHLIE_GRAPH_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphlie {

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 0..n-1 with a strictly sorted edge list.
/// Immutable value; equal values are the same labeled graph.
class Graph {
 public:
  Graph() = default;

  // Normalizes pair orientation and deduplicates (set semantics). Throws
  // LoopEdgeError on a pair (i, i) and VertexOutOfRangeError on endpoints
  // outside [0, n).
  static Graph from_edges(int n_vertices,
                          const std::vector<std::pair<int, int>>& pairs);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int i, int j) const;
  int degree(int v) const;
  int n_isolated_vertices() const;

  /// Image under the vertex permutation perm: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  Graph complement() const;

  auto operator<=>(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // strictly sorted, u < v < n_
};

/// Explicit isomorphism: vertex i of source maps to vertex_map[i] of target.
struct GraphIso {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;

  /// True when vertex_map is a bijection carrying the source edge set
  /// exactly onto the target edge set.
  bool is_valid() const;
};

/// Vertex degrees, sorted descending.
std::vector<int> degree_sequence(const Graph& g);

// graph6 interchange format for n < 63: one byte n+63, then the
// upper-triangle adjacency bits in column-major order ((0,1), (0,2), (1,2),
// (0,3), ...), packed 6 per byte MSB-first, each byte offset by 63, with the
// last byte zero-padded.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain text edge list: first line "n", then one "i j" line per edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace graphlie

#endif
