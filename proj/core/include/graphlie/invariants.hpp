#ifndef GRAPHLIE_INVARIANTS_HPP
#define GRAPHLIE_INVARIANTS_HPP

#include <compare>
#include <vector>

#include "graphlie/algebra.hpp"

namespace graphlie {

/// Isomorphism invariants of a graph Lie algebra. Equal algebras always have
/// equal vectors; the converse may fail, so unequal vectors certify
/// non-isomorphism while equal vectors decide nothing.
struct InvariantVector {
  int dim = 0;
  int dim_derived = 0;
  int dim_center = 0;
  int nilpotency_class = 0;
  /// ad-ranks of the vertex generators, sorted descending (matches the
  /// source graph's degree sequence).
  std::vector<int> ad_rank_multiset;

  auto operator<=>(const InvariantVector&) const = default;
};

/// dim [n, n], the span of all brackets.
int derived_subalgebra_dim(const GraphLieAlgebra& a);

/// dim Z(n) = common nullity of all adjoint maps.
int center_dim(const GraphLieAlgebra& a);

/// Rank of ad(e_label): x -> [e_label, x].
int ad_rank(const GraphLieAlgebra& a, const BasisLabel& label);

InvariantVector invariant_vector(const GraphLieAlgebra& a);

}  // namespace graphlie

#endif
