#ifndef GRAPHLIE_MORPHISMS_HPP
#define GRAPHLIE_MORPHISMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphlie/algebra.hpp"
#include "graphlie/canonical.hpp"
#include "graphlie/invariants.hpp"
#include "graphlie/qmatrix.hpp"

namespace graphlie {

/// Linear map between graph Lie algebras, stored as a dense rational matrix
/// over the two bases (columns index the source basis, rows the target's).
class LieMorphism {
 public:
  /// matrix must be target.dimension() x source.dimension(); throws
  /// AlgebraMismatchError otherwise.
  LieMorphism(GraphLieAlgebra source, GraphLieAlgebra target, QMatrix matrix,
              bool claims_isomorphism);

  const GraphLieAlgebra& source() const { return source_; }
  const GraphLieAlgebra& target() const { return target_; }
  const QMatrix& matrix() const { return matrix_; }
  bool claims_isomorphism() const { return claims_iso_; }

  /// Image of x; throws AlgebraMismatchError when x is not in source().
  LieElement apply(const LieElement& x) const;

 private:
  GraphLieAlgebra source_;
  GraphLieAlgebra target_;
  QMatrix matrix_;
  bool claims_iso_;
};

/// The Lie algebra isomorphism induced by a graph isomorphism sigma:
/// v_i -> v_{sigma(i)} and w_{i,j} -> s * w_{sigma(i),sigma(j)} where the
/// image pair is written in increasing order and s = -1 exactly when sigma
/// reverses the order of i < j. Throws InvalidGraphIsoError when iso does
/// not describe an isomorphism of its stated graphs.
LieMorphism induce_lie_iso(const GraphIso& iso);

/// Checks the homomorphism law f([a,b]) = [f(a), f(b)] on every basis pair,
/// and invertibility whenever the morphism claims to be an isomorphism.
bool verify_morphism(const LieMorphism& f);

/// Witness of non-isomorphism: the first invariant field (in declaration
/// order: dim, dim_derived, dim_center, nilpotency_class, ad_rank_multiset,
/// then the canonical graph) whose values differ, rendered as strings.
struct Separator {
  std::string invariant;
  std::string left_value;
  std::string right_value;
};

enum class IsoVerdict { kIsomorphic, kNotIsomorphic };

/// Outcome of the isomorphism decision. Isomorphic: sigma (a vertex
/// bijection of the source graphs) and tau (the induced matrix) are present.
/// Not isomorphic: separator is present.
struct IsoCertificate {
  IsoVerdict verdict = IsoVerdict::kNotIsomorphic;
  std::optional<std::vector<int>> sigma;
  std::optional<QMatrix> tau;
  std::optional<Separator> separator;
};

/// Decides isomorphism by canonically labeling the source graphs, returning
/// a checkable certificate either way.
IsoCertificate algebras_isomorphic(const GraphLieAlgebra& a,
                                   const GraphLieAlgebra& b);

}  // namespace graphlie

#endif
