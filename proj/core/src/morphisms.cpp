#include "graphlie/morphisms.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

LieMorphism::LieMorphism(GraphLieAlgebra source, GraphLieAlgebra target,
                         QMatrix matrix, bool claims_isomorphism)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)),
      claims_iso_(claims_isomorphism) {
  if (matrix_.rows() != target_.dimension() ||
      matrix_.cols() != source_.dimension())
    throw AlgebraMismatchError(
        "morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
        std::to_string(matrix_.cols()) + " but the algebras need " +
        std::to_string(target_.dimension()) + "x" +
        std::to_string(source_.dimension()));
}

LieElement LieMorphism::apply(const LieElement& x) const {
  if (!x.algebra().same_algebra_as(source_))
    throw AlgebraMismatchError("element is not in the morphism's source");
  std::map<int, Rational> out;
  for (const auto& [k, c] : x.coords())
    for (int r = 0; r < matrix_.rows(); ++r)
      if (matrix_(r, k) != 0) out[r] += c * matrix_(r, k);
  return target_.element_from_coords(std::move(out));
}

LieMorphism induce_lie_iso(const GraphIso& iso) {
  if (!iso.is_valid())
    throw InvalidGraphIsoError("vertex map is not an isomorphism of its graphs");
  GraphLieAlgebra src = build_algebra(iso.source);
  GraphLieAlgebra dst = build_algebra(iso.target);
  const std::vector<int>& sigma = iso.vertex_map;
  QMatrix m(dst.dimension(), src.dimension());
  int n = iso.source.n_vertices();
  for (int i = 0; i < n; ++i) m(sigma[i], i) = 1;
  for (const Edge& e : iso.source.edges()) {
    int col = src.index_of(BasisLabel::edge_wedge(e.u, e.v));
    int row = dst.index_of(BasisLabel::edge_wedge(sigma[e.u], sigma[e.v]));
    // w_{i,j} with i < j maps to w_{sigma(i),sigma(j)}; rewriting the image
    // pair in increasing order flips the sign when sigma reverses the order.
    m(row, col) = sigma[e.u] < sigma[e.v] ? 1 : -1;
  }
  return LieMorphism(std::move(src), std::move(dst), std::move(m), true);
}

bool verify_morphism(const LieMorphism& f) {
  const GraphLieAlgebra& src = f.source();
  int dim = src.dimension();
  // Bilinearity and antisymmetry hold in both algebras by construction, so
  // the homomorphism law on basis pairs a < b settles it for all elements.
  for (int a = 0; a < dim; ++a) {
    LieElement ea = src.basis_element(src.basis()[a]);
    LieElement fa = f.apply(ea);
    for (int b = a + 1; b < dim; ++b) {
      LieElement eb = src.basis_element(src.basis()[b]);
      if (!(f.apply(bracket(ea, eb)) == bracket(fa, f.apply(eb))))
        return false;
    }
  }
  if (f.claims_isomorphism() && !inverse(f.matrix()).has_value()) return false;
  return true;
}

namespace {

std::string format_multiset(const std::vector<int>& xs) {
  std::string s = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

// First field, in declaration order, on which the invariant vectors differ;
// falls back to the canonical graphs, which always differ for
// non-isomorphic inputs.
Separator find_separator(const GraphLieAlgebra& a, const GraphLieAlgebra& b) {
  InvariantVector ia = invariant_vector(a);
  InvariantVector ib = invariant_vector(b);
  if (ia.dim != ib.dim)
    return {"dim", std::to_string(ia.dim), std::to_string(ib.dim)};
  if (ia.dim_derived != ib.dim_derived)
    return {"dim_derived", std::to_string(ia.dim_derived),
            std::to_string(ib.dim_derived)};
  if (ia.dim_center != ib.dim_center)
    return {"dim_center", std::to_string(ia.dim_center),
            std::to_string(ib.dim_center)};
  if (ia.nilpotency_class != ib.nilpotency_class)
    return {"nilpotency_class", std::to_string(ia.nilpotency_class),
            std::to_string(ib.nilpotency_class)};
  if (ia.ad_rank_multiset != ib.ad_rank_multiset)
    return {"ad_rank_multiset", format_multiset(ia.ad_rank_multiset),
            format_multiset(ib.ad_rank_multiset)};
  return {"canonical_graph",
          to_graph6(canonical_form(a.source_graph()).canonical_graph),
          to_graph6(canonical_form(b.source_graph()).canonical_graph)};
}

}  // namespace

IsoCertificate algebras_isomorphic(const GraphLieAlgebra& a,
                                   const GraphLieAlgebra& b) {
  IsoCertificate cert;
  std::optional<GraphIso> iso =
      are_isomorphic(a.source_graph(), b.source_graph());
  if (iso.has_value()) {
    LieMorphism f = induce_lie_iso(*iso);
    cert.verdict = IsoVerdict::kIsomorphic;
    cert.sigma = iso->vertex_map;
    cert.tau = f.matrix();
    return cert;
  }
  cert.verdict = IsoVerdict::kNotIsomorphic;
  cert.separator = find_separator(a, b);
  return cert;
}

}  // namespace graphlie
