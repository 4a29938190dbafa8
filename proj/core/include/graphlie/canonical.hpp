#ifndef GRAPHLIE_CANONICAL_HPP
#define GRAPHLIE_CANONICAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graphlie/graph.hpp"

namespace graphlie {

/// Canonical labeling: relabeling[v] is the canonical label of vertex v and
/// canonical_graph is the graph relabeled accordingly. Two graphs are
/// isomorphic exactly when their canonical graphs are equal.
struct CanonicalForm {
  std::vector<int> relabeling;
  Graph canonical_graph;
};

// Iterated neighborhood partition refinement with backtracking over the
// first non-singleton cell; among all discrete refinements the
// lexicographically smallest adjacency bit string wins. Self-contained and
// intended for desk-scale graphs (n <= 64 hard limit).
CanonicalForm canonical_form(const Graph& g);

/// A witness isomorphism when the graphs are isomorphic, absent otherwise.
std::optional<GraphIso> are_isomorphic(const Graph& g1, const Graph& g2);

/// Order of the automorphism group, by pruned backtracking search.
std::uint64_t automorphism_count(const Graph& g);

}  // namespace graphlie

#endif
