#include "graphlie/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement of an ordered partition: repeatedly split every cell
// by each vertex's neighbor-count signature against all current cells,
// subcells ordered by ascending signature, until stable. The splitting rule
// only looks at data preserved by isomorphism, so corresponding partitions
// of isomorphic graphs refine to corresponding partitions.
void refine(const std::vector<std::uint64_t>& adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> cell_mask(cells.size(), 0);
    for (size_t k = 0; k < cells.size(); ++k)
      for (int v : cells[k]) cell_mask[k] |= std::uint64_t(1) << v;
    Cells next;
    next.reserve(cells.size());
    for (const std::vector<int>& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> key(cells.size());
        for (size_t k = 0; k < cells.size(); ++k)
          key[k] = std::popcount(adj[v] & cell_mask[k]);
        split[key].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [key, verts] : split) next.push_back(std::move(verts));
    }
    cells = std::move(next);
  }
}

// Upper-triangle adjacency bits of the relabeled graph in column-major pair
// order ((0,1), (0,2), (1,2), (0,3), ...), packed into 64-bit blocks with
// earlier pairs more significant, so lexicographic block comparison orders
// the underlying bit strings.
std::vector<std::uint64_t> leaf_code(const std::vector<std::uint64_t>& adj,
                                     const std::vector<int>& label_at) {
  int n = int(label_at.size());
  int bits = n * (n - 1) / 2;
  std::vector<std::uint64_t> code((bits + 63) / 64, 0);
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (adj[label_at[i]] >> label_at[j] & 1)
        code[b / 64] |= std::uint64_t(1) << (63 - b % 64);
  return code;
}

struct Searcher {
  int n;
  std::vector<std::uint64_t> adj;

  std::vector<std::uint64_t> best_code;
  std::vector<int> best_label_at;          // canonical position -> vertex
  std::vector<std::vector<int>> aut_gens;  // automorphisms met at leaves
  std::vector<int> base;                   // individualized vertices, in order

  void leaf(const Cells& cells) {
    std::vector<int> label_at(n);
    for (int p = 0; p < n; ++p) label_at[p] = cells[p][0];
    std::vector<std::uint64_t> code = leaf_code(adj, label_at);
    if (best_code.empty() || code < best_code) {
      best_code = std::move(code);
      best_label_at = std::move(label_at);
      return;
    }
    if (code == best_code) {
      // Two labelings with one code differ by an automorphism:
      // v at canonical position p in this leaf corresponds to the vertex
      // at position p in the best leaf.
      std::vector<int> sigma(n);
      for (int p = 0; p < n; ++p) sigma[label_at[p]] = best_label_at[p];
      aut_gens.push_back(std::move(sigma));
    }
  }

  // Orbit partition of the subgroup generated by the stored automorphisms
  // that fix every base vertex; pruning with it is sound because such an
  // automorphism maps the current subtree onto itself.
  std::vector<int> usable_orbits() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const std::vector<int>& g : aut_gens) {
      bool fixes_base = true;
      for (int b : base)
        if (g[b] != b) {
          fixes_base = false;
          break;
        }
      if (!fixes_base) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(g[v]);
        if (a != b) parent[a] = b;
      }
    }
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = find(v);
    return root;
  }

  void search(Cells cells) {
    refine(adj, cells);
    if (int(cells.size()) == n) {
      leaf(cells);
      return;
    }
    size_t t = 0;
    while (cells[t].size() == 1) ++t;
    std::vector<int> target = cells[t];
    std::vector<int> tried;
    size_t gens_seen = aut_gens.size();
    std::vector<int> orbits;
    for (int v : target) {
      if (!tried.empty()) {
        if (orbits.empty() || gens_seen != aut_gens.size()) {
          orbits = usable_orbits();
          gens_seen = aut_gens.size();
        }
        bool redundant = false;
        for (int u : tried)
          if (orbits[u] == orbits[v]) {
            redundant = true;
            break;
          }
        if (redundant) continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : target)
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      base.push_back(v);
      search(std::move(child));
      base.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.n_vertices();
  if (n > 64)
    throw OutOfBoundsError("canonical labeling limited to 64 vertices, got " +
                           std::to_string(n));
  CanonicalForm out;
  if (n == 0) {
    out.canonical_graph = g;
    return out;
  }
  Searcher s;
  s.n = n;
  s.adj.assign(n, 0);
  for (const Edge& e : g.edges()) {
    s.adj[e.u] |= std::uint64_t(1) << e.v;
    s.adj[e.v] |= std::uint64_t(1) << e.u;
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  s.search(Cells{all});
  out.relabeling.assign(n, 0);
  for (int p = 0; p < n; ++p) out.relabeling[s.best_label_at[p]] = p;
  out.canonical_graph = g.relabeled(out.relabeling);
  return out;
}

std::optional<GraphIso> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges())
    return std::nullopt;
  CanonicalForm c1 = canonical_form(g1);
  CanonicalForm c2 = canonical_form(g2);
  if (!(c1.canonical_graph == c2.canonical_graph)) return std::nullopt;
  int n = g1.n_vertices();
  std::vector<int> inv2(n);
  for (int v = 0; v < n; ++v) inv2[c2.relabeling[v]] = v;
  GraphIso iso;
  iso.source = g1;
  iso.target = g2;
  iso.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) iso.vertex_map[v] = inv2[c1.relabeling[v]];
  return iso;
}

namespace {

std::uint64_t count_extensions(const std::vector<std::uint64_t>& adj, int n,
                               std::vector<int>& map, std::vector<char>& used,
                               int i) {
  if (i == n) return 1;
  std::uint64_t total = 0;
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    if (std::popcount(adj[t]) != std::popcount(adj[i])) continue;
    bool ok = true;
    for (int j = 0; j < i; ++j)
      if (((adj[i] >> j) & 1) != ((adj[t] >> map[j]) & 1)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[i] = t;
    used[t] = 1;
    total += count_extensions(adj, n, map, used, i + 1);
    used[t] = 0;
  }
  return total;
}

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
  int n = g.n_vertices();
  if (n > 64)
    throw OutOfBoundsError("automorphism counting limited to 64 vertices, got " +
                           std::to_string(n));
  if (n == 0) return 1;
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t(1) << e.v;
    adj[e.v] |= std::uint64_t(1) << e.u;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return count_extensions(adj, n, map, used, 0);
}

}  // namespace graphlie
