#ifndef GRAPHLIE_TESTS_COMMON_HPP
#define GRAPHLIE_TESTS_COMMON_HPP

#include <utility>
#include <vector>

#include "graphlie/graph.hpp"

namespace testutil {

inline graphlie::Graph edgeless(int n) {
  return graphlie::Graph::from_edges(n, {});
}

inline graphlie::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graphlie::Graph::from_edges(n, e);
}

inline graphlie::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graphlie::Graph::from_edges(n, e);
}

inline graphlie::Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return graphlie::Graph::from_edges(n, e);
}

/// Star with center 0 and n-1 leaves.
inline graphlie::Graph star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return graphlie::Graph::from_edges(n, e);
}

/// Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
inline graphlie::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return graphlie::Graph::from_edges(10, e);
}

}  // namespace testutil

#endif
