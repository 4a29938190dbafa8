#ifndef GRAPHLIE_CATALOG_HPP
#define GRAPHLIE_CATALOG_HPP

#include <vector>

#include "graphlie/algebra.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/graph_enumeration.hpp"
#include "graphlie/invariants.hpp"

namespace graphlie {

struct CatalogEntry {
  Graph canonical_graph;
  GraphLieAlgebra algebra;
  InvariantVector invariants;
};

/// All isomorphism classes of graph Lie algebras of one dimension, one entry
/// per class, ordered by (vertex count, edge count, canonical graph). The
/// catalog is complete whenever dimension <= the configured vertex bound;
/// beyond that, classes whose graphs need more vertices than the bound are
/// absent (classify_dimension throws rather than return a silently short
/// list).
struct DimensionCatalog {
  int dimension = 0;
  bool include_abelian = true;
  std::vector<CatalogEntry> entries;
};

/// Sweeps (v, e) with v + e == dimension, v <= opts.max_vertices. The
/// abelian class (edgeless graph; only class with e == 0) is dropped when
/// include_abelian is false. Throws OutOfBoundsError when dimension < 1 or
/// dimension > opts.max_vertices, the range where the sweep is provably
/// exhaustive.
DimensionCatalog classify_dimension(int dimension, bool include_abelian = true,
                                    const EnumerationOptions& opts = {});

/// Class counts for dimensions 1..max_dimension (index d-1).
std::vector<int> catalog_counts(int max_dimension, bool include_abelian = true,
                                const EnumerationOptions& opts = {});

}  // namespace graphlie

#endif
