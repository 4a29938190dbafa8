#include "graphlie/catalog.hpp"

#include <string>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

namespace {

void check_dimension(int dimension, const EnumerationOptions& opts) {
  if (dimension < 1)
    throw OutOfBoundsError("dimension must be >= 1, got " +
                           std::to_string(dimension));
  if (dimension > opts.max_vertices)
    throw OutOfBoundsError(
        "dimension " + std::to_string(dimension) +
        " exceeds the vertex bound " + std::to_string(opts.max_vertices) +
        "; the catalog would miss classes (the edgeless graph of dimension d "
        "needs d vertices)");
}

DimensionCatalog classify_with(GraphEnumerator& en, int dimension,
                               bool include_abelian) {
  check_dimension(dimension, en.options());
  DimensionCatalog cat;
  cat.dimension = dimension;
  cat.include_abelian = include_abelian;
  // dim n = vertices + edges, so sweep the splits v + e == dimension. Each
  // graph class appears under exactly one split and distinct classes give
  // non-isomorphic algebras, so entries are pairwise non-isomorphic.
  for (int v = 1; v <= dimension; ++v) {
    int e = dimension - v;
    if (e > v * (v - 1) / 2) continue;
    if (e == 0 && !include_abelian) continue;  // the lone abelian class
    for (const Graph& g : en.classes(v, e)) {
      GraphLieAlgebra a = build_algebra(g);
      InvariantVector iv = invariant_vector(a);
      cat.entries.push_back({g, std::move(a), std::move(iv)});
    }
  }
  return cat;
}

}  // namespace

DimensionCatalog classify_dimension(int dimension, bool include_abelian,
                                    const EnumerationOptions& opts) {
  GraphEnumerator en(opts);
  return classify_with(en, dimension, include_abelian);
}

std::vector<int> catalog_counts(int max_dimension, bool include_abelian,
                                const EnumerationOptions& opts) {
  check_dimension(max_dimension, opts);
  GraphEnumerator en(opts);
  std::vector<int> counts;
  counts.reserve(max_dimension);
  for (int d = 1; d <= max_dimension; ++d)
    counts.push_back(int(classify_with(en, d, include_abelian).entries.size()));
  return counts;
}

}  // namespace graphlie
