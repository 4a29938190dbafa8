#ifndef GRAPHLIE_ALGEBRA_HPP
#define GRAPHLIE_ALGEBRA_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/rational.hpp"

namespace graphlie {

/// Basis label of a graph Lie algebra: the generator v_i of a vertex or the
/// wedge generator w_{i,j} of an edge {i, j}.
class BasisLabel {
 public:
  static BasisLabel vertex(int i);
  /// Unordered pair; i != j (LoopEdgeError otherwise).
  static BasisLabel edge_wedge(int i, int j);

  bool is_vertex() const { return kind_ == Kind::kVertex; }
  bool is_edge_wedge() const { return kind_ == Kind::kEdgeWedge; }
  int vertex_index() const;  // vertex labels only
  Edge edge() const;         // edge labels only

  std::string to_string() const;  // "v0", "w0_1"

  // Vertex labels order before edge labels; each kind by index pair.
  auto operator<=>(const BasisLabel&) const = default;

 private:
  enum class Kind { kVertex, kEdgeWedge };

  BasisLabel(Kind kind, int i, int j) : kind_(kind), i_(i), j_(j) {}

  Kind kind_;
  int i_;
  int j_;
};

class LieElement;

/// The 2-step nilpotent Lie algebra of a finite simple graph: one generator
/// per vertex, one central generator per edge, and [v_i, v_j] = w_{i,j}
/// exactly when {i, j} is an edge (sign +1 for i < j). The basis lists all
/// vertex generators first, then edge generators in sorted pair order.
/// Cheap-to-copy immutable handle.
class GraphLieAlgebra {
 public:
  const Graph& source_graph() const;
  int dimension() const;
  const std::vector<BasisLabel>& basis() const;

  /// Position of label in the basis. Throws UnknownBasisLabelError.
  int index_of(const BasisLabel& label) const;

  /// Nonzero structure constants keyed (a, b) with a < b; each value is the
  /// sparse coordinate list of [e_a, e_b]. Brackets for a > b follow by
  /// antisymmetry.
  const std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>&
  structure_constants() const;

  LieElement zero() const;
  LieElement basis_element(const BasisLabel& label) const;
  /// Element from (label, coefficient) terms; repeated labels accumulate.
  LieElement element(
      const std::vector<std::pair<BasisLabel, Rational>>& terms) const;
  /// Element from basis-index coordinates; zero coefficients are dropped.
  LieElement element_from_coords(std::map<int, Rational> coords) const;

  /// Structural identity: built from the same labeled graph.
  bool same_algebra_as(const GraphLieAlgebra& other) const;
  bool operator==(const GraphLieAlgebra& other) const {
    return same_algebra_as(other);
  }

 private:
  friend GraphLieAlgebra build_algebra(const Graph& g);
  friend LieElement bracket(const LieElement& x, const LieElement& y);

  struct Data {
    Graph graph;
    std::vector<BasisLabel> basis;
    std::map<BasisLabel, int> index;
    std::vector<std::vector<int>> edge_basis_index;  // n x n, -1 off edges
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>
        constants;
  };

  explicit GraphLieAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

GraphLieAlgebra build_algebra(const Graph& g);

/// Sparse exact-rational coordinate vector over an algebra's basis. Stores no
/// zero coefficients.
class LieElement {
 public:
  const GraphLieAlgebra& algebra() const { return alg_; }
  const std::map<int, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  /// Coefficient of a basis label (0 when absent). Throws
  /// UnknownBasisLabelError for labels outside the algebra's basis.
  Rational coeff(const BasisLabel& label) const;

  LieElement operator-() const;
  friend LieElement operator+(const LieElement& x, const LieElement& y);
  friend LieElement operator-(const LieElement& x, const LieElement& y);
  friend LieElement operator*(const Rational& c, const LieElement& x);

  /// Equal when in structurally identical algebras with equal coordinates.
  bool operator==(const LieElement& other) const;

 private:
  friend class GraphLieAlgebra;
  friend LieElement bracket(const LieElement& x, const LieElement& y);

  LieElement(GraphLieAlgebra alg, std::map<int, Rational> coords)
      : alg_(std::move(alg)), coords_(std::move(coords)) {}

  GraphLieAlgebra alg_;
  std::map<int, Rational> coords_;
};

/// Bilinear extension of the structure constants. Throws
/// AlgebraMismatchError when x and y live in different algebras.
LieElement bracket(const LieElement& x, const LieElement& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; identically zero for these algebras.
LieElement jacobi_defect(const LieElement& x, const LieElement& y,
                         const LieElement& z);

/// Length of the lower central series, computed from the series itself:
/// 0 for the zero algebra, 1 when abelian, otherwise 2.
int nilpotency_class(const GraphLieAlgebra& a);

}  // namespace graphlie

#endif
