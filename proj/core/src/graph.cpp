#include "graphlie/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

Graph Graph::from_edges(int n_vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 0)
    throw VertexOutOfRangeError("negative vertex count: " +
                                std::to_string(n_vertices));
  std::set<Edge> dedup;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
      throw VertexOutOfRangeError("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") exceeds vertex range [0, " +
                                  std::to_string(n_vertices) + ")");
    if (u == v)
      throw LoopEdgeError("loop at vertex " + std::to_string(u));
    dedup.insert(Edge{std::min(u, v), std::max(u, v)});
  }
  Graph g;
  g.n_ = n_vertices;
  g.edges_.assign(dedup.begin(), dedup.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_)
    throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                " exceeds range [0, " + std::to_string(n_) + ")");
  int d = 0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

int Graph::n_isolated_vertices() const {
  std::vector<char> touched(n_, 0);
  for (const Edge& e : edges_) touched[e.u] = touched[e.v] = 1;
  int k = 0;
  for (char t : touched)
    if (!t) ++k;
  return k;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw VertexOutOfRangeError("relabeling has " +
                                std::to_string(perm.size()) + " entries for " +
                                std::to_string(n_) + " vertices");
  std::vector<char> seen(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[p])
      throw VertexOutOfRangeError("relabeling is not a permutation");
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(n_, mapped);
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> co;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) co.emplace_back(u, v);
  return from_edges(n_, co);
}

bool GraphIso::is_valid() const {
  if (source.n_vertices() != target.n_vertices()) return false;
  if (source.n_edges() != target.n_edges()) return false;
  int n = source.n_vertices();
  if (static_cast<int>(vertex_map.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int p : vertex_map) {
    if (p < 0 || p >= n || seen[p]) return false;
    seen[p] = 1;
  }
  // Edge counts agree, so preserving edges is enough.
  for (const Edge& e : source.edges())
    if (!target.has_edge(vertex_map[e.u], vertex_map[e.v])) return false;
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.n_vertices(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(deg.rbegin(), deg.rend());
  return deg;
}

// graph6 (n < 63 only): one byte n+63, then the upper triangle of the
// adjacency matrix read column by column -- bit (i, j) for i < j appears at
// position j*(j-1)/2 + i -- packed 6 bits per byte, high bit first, each
// byte offset by 63, zero-padded to a multiple of 6.

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw MalformedGraph6Error("empty graph6 string");
  int n = text[0] - 63;
  if (n < 0 || n > 62)
    throw MalformedGraph6Error("unsupported graph6 size byte: '" +
                               std::string(1, text[0]) + "'");
  int n_bits = n * (n - 1) / 2;
  int n_bytes = (n_bits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + n_bytes)
    throw MalformedGraph6Error("graph6 string for " + std::to_string(n) +
                               " vertices needs " + std::to_string(1 + n_bytes) +
                               " bytes, got " + std::to_string(text.size()));
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      char c = text[1 + bit / 6];
      if (c < 63 || c > 126)
        throw MalformedGraph6Error("graph6 byte out of range: '" +
                                   std::string(1, c) + "'");
      if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  for (int k = n_bits; k < 6 * n_bytes; ++k) {
    char c = text[1 + k / 6];
    if (c < 63 || c > 126)
      throw MalformedGraph6Error("graph6 byte out of range: '" +
                                 std::string(1, c) + "'");
    if ((c - 63) >> (5 - k % 6) & 1)
      throw MalformedGraph6Error("nonzero padding bit in graph6 string");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  int n = g.n_vertices();
  if (n > 62)
    throw MalformedGraph6Error("graph6 output limited to 62 vertices, got " +
                               std::to_string(n));
  int n_bits = n * (n - 1) / 2;
  int n_bytes = (n_bits + 5) / 6;
  std::string out(1 + n_bytes, char(63));
  out[0] = char(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
  return out;
}

// Edge-list text: first non-comment line is the vertex count, each further
// line one "u v" pair. '#' starts a comment; blank lines are skipped.

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) {
        n = -1;  // blank or comment-only line before the header
        continue;
      }
      if (n < 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": negative vertex count");
      std::string rest;
      if (fields >> rest)
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing text after vertex count");
      continue;
    }
    int u, v;
    if (!(fields >> u)) continue;
    if (!(fields >> v))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v' edge pair");
    std::string rest;
    if (fields >> rest)
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing text after edge pair");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list has no vertex-count line");
  try {
    return Graph::from_edges(n, edges);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace graphlie
