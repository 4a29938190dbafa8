#include "graphlie/invariants.hpp"

#include <algorithm>
#include <vector>

#include "graphlie/qmatrix.hpp"

namespace graphlie {

namespace {

// Matrix of ad(e_label): entry (c, b) is the e_c coordinate of
// [e_label, e_b].
QMatrix ad_matrix(const GraphLieAlgebra& a, const BasisLabel& label) {
  int dim = a.dimension();
  QMatrix m(dim, dim);
  LieElement e = a.basis_element(label);
  for (int b = 0; b < dim; ++b) {
    LieElement img = bracket(e, a.basis_element(a.basis()[b]));
    for (const auto& [c, v] : img.coords()) m(c, b) = v;
  }
  return m;
}

}  // namespace

int derived_subalgebra_dim(const GraphLieAlgebra& a) {
  int dim = a.dimension();
  const auto& constants = a.structure_constants();
  QMatrix m(int(constants.size()), dim);
  int r = 0;
  for (const auto& [pair, terms] : constants) {
    for (const auto& [c, v] : terms) m(r, c) = v;
    ++r;
  }
  return rank(m);
}

int center_dim(const GraphLieAlgebra& a) {
  int dim = a.dimension();
  // x is central iff ad(e_a) x = 0 for every basis element, so the center is
  // the nullspace of all ad matrices stacked.
  QMatrix stacked(dim * dim, dim);
  for (int b = 0; b < dim; ++b) {
    LieElement e = a.basis_element(a.basis()[b]);
    for (int c = 0; c < dim; ++c) {
      LieElement img = bracket(e, a.basis_element(a.basis()[c]));
      for (const auto& [row, v] : img.coords()) stacked(b * dim + row, c) = v;
    }
  }
  return nullity(stacked);
}

int ad_rank(const GraphLieAlgebra& a, const BasisLabel& label) {
  return rank(ad_matrix(a, label));
}

InvariantVector invariant_vector(const GraphLieAlgebra& a) {
  InvariantVector iv;
  iv.dim = a.dimension();
  iv.dim_derived = derived_subalgebra_dim(a);
  iv.dim_center = center_dim(a);
  iv.nilpotency_class = nilpotency_class(a);
  for (int v = 0; v < a.source_graph().n_vertices(); ++v)
    iv.ad_rank_multiset.push_back(ad_rank(a, BasisLabel::vertex(v)));
  std::sort(iv.ad_rank_multiset.rbegin(), iv.ad_rank_multiset.rend());
  return iv;
}

}  // namespace graphlie
