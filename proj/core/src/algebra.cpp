#include "graphlie/algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graphlie/errors.hpp"
#include "graphlie/qmatrix.hpp"

namespace graphlie {

BasisLabel BasisLabel::vertex(int i) {
  if (i < 0)
    throw VertexOutOfRangeError("negative vertex index " + std::to_string(i));
  return BasisLabel(Kind::kVertex, i, i);
}

BasisLabel BasisLabel::edge_wedge(int i, int j) {
  if (i < 0 || j < 0)
    throw VertexOutOfRangeError("negative vertex index in edge (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  if (i == j) throw LoopEdgeError("loop at vertex " + std::to_string(i));
  return BasisLabel(Kind::kEdgeWedge, std::min(i, j), std::max(i, j));
}

int BasisLabel::vertex_index() const {
  if (!is_vertex()) throw Error("vertex_index on the edge label " + to_string());
  return i_;
}

Edge BasisLabel::edge() const {
  if (!is_edge_wedge()) throw Error("edge on the vertex label " + to_string());
  return Edge{i_, j_};
}

std::string BasisLabel::to_string() const {
  if (is_vertex()) return "v" + std::to_string(i_);
  return "w" + std::to_string(i_) + "_" + std::to_string(j_);
}

GraphLieAlgebra build_algebra(const Graph& g) {
  auto d = std::make_shared<GraphLieAlgebra::Data>();
  d->graph = g;
  int n = g.n_vertices();
  d->basis.reserve(n + g.n_edges());
  for (int i = 0; i < n; ++i) d->basis.push_back(BasisLabel::vertex(i));
  d->edge_basis_index.assign(n, std::vector<int>(n, -1));
  for (const Edge& e : g.edges()) {
    int idx = int(d->basis.size());
    d->basis.push_back(BasisLabel::edge_wedge(e.u, e.v));
    d->edge_basis_index[e.u][e.v] = idx;
    d->edge_basis_index[e.v][e.u] = idx;
    d->constants[{e.u, e.v}] = {{idx, Rational(1)}};
  }
  for (int k = 0; k < int(d->basis.size()); ++k) d->index[d->basis[k]] = k;
  return GraphLieAlgebra(std::move(d));
}

const Graph& GraphLieAlgebra::source_graph() const { return d_->graph; }

int GraphLieAlgebra::dimension() const { return int(d_->basis.size()); }

const std::vector<BasisLabel>& GraphLieAlgebra::basis() const {
  return d_->basis;
}

int GraphLieAlgebra::index_of(const BasisLabel& label) const {
  auto it = d_->index.find(label);
  if (it == d_->index.end())
    throw UnknownBasisLabelError(label.to_string() +
                                 " is not a basis label of this algebra");
  return it->second;
}

const std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>&
GraphLieAlgebra::structure_constants() const {
  return d_->constants;
}

LieElement GraphLieAlgebra::zero() const { return LieElement(*this, {}); }

LieElement GraphLieAlgebra::basis_element(const BasisLabel& label) const {
  return LieElement(*this, {{index_of(label), Rational(1)}});
}

LieElement GraphLieAlgebra::element(
    const std::vector<std::pair<BasisLabel, Rational>>& terms) const {
  std::map<int, Rational> coords;
  for (const auto& [label, c] : terms) coords[index_of(label)] += c;
  return element_from_coords(std::move(coords));
}

LieElement GraphLieAlgebra::element_from_coords(
    std::map<int, Rational> coords) const {
  for (auto it = coords.begin(); it != coords.end();) {
    if (it->first < 0 || it->first >= dimension())
      throw OutOfBoundsError("coordinate index " + std::to_string(it->first) +
                             " outside basis range [0, " +
                             std::to_string(dimension()) + ")");
    if (it->second == 0)
      it = coords.erase(it);
    else
      ++it;
  }
  return LieElement(*this, std::move(coords));
}

bool GraphLieAlgebra::same_algebra_as(const GraphLieAlgebra& other) const {
  return d_ == other.d_ || d_->graph == other.d_->graph;
}

Rational LieElement::coeff(const BasisLabel& label) const {
  auto it = coords_.find(alg_.index_of(label));
  return it == coords_.end() ? Rational(0) : it->second;
}

LieElement LieElement::operator-() const {
  std::map<int, Rational> neg;
  for (const auto& [k, c] : coords_) neg.emplace(k, -c);
  return LieElement(alg_, std::move(neg));
}

LieElement operator+(const LieElement& x, const LieElement& y) {
  if (!x.alg_.same_algebra_as(y.alg_))
    throw AlgebraMismatchError("adding elements of different algebras");
  std::map<int, Rational> sum = x.coords_;
  for (const auto& [k, c] : y.coords_) {
    auto [it, fresh] = sum.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) sum.erase(it);
    }
  }
  return LieElement(x.alg_, std::move(sum));
}

LieElement operator-(const LieElement& x, const LieElement& y) {
  return x + (-y);
}

LieElement operator*(const Rational& c, const LieElement& x) {
  if (c == 0) return x.alg_.zero();
  std::map<int, Rational> scaled;
  for (const auto& [k, v] : x.coords_) scaled.emplace(k, c * v);
  return LieElement(x.alg_, std::move(scaled));
}

bool LieElement::operator==(const LieElement& other) const {
  return alg_.same_algebra_as(other.alg_) && coords_ == other.coords_;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (!x.algebra().same_algebra_as(y.algebra()))
    throw AlgebraMismatchError("bracket of elements of different algebras");
  const GraphLieAlgebra& a = x.algebra();
  int n = a.source_graph().n_vertices();
  const auto& edge_index = a.d_->edge_basis_index;
  std::map<int, Rational> acc;
  // Only the vertex parts interact: edge generators are central.
  for (const auto& [i, xi] : x.coords()) {
    if (i >= n) break;  // coords are ordered; the edge block starts at n
    for (const auto& [j, yj] : y.coords()) {
      if (j >= n) break;
      int w = edge_index[i][j];
      if (w < 0) continue;  // non-adjacent generators commute
      if (i < j)
        acc[w] += xi * yj;
      else
        acc[w] -= xi * yj;
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return LieElement(a, std::move(acc));
}

LieElement jacobi_defect(const LieElement& x, const LieElement& y,
                         const LieElement& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
         bracket(z, bracket(x, y));
}

int nilpotency_class(const GraphLieAlgebra& a) {
  int dim = a.dimension();
  // Rows span the current term of the lower central series.
  QMatrix cur = QMatrix::identity(dim);
  int c = 0;
  while (cur.rows() > 0) {
    ++c;
    std::vector<LieElement> images;
    for (int i = 0; i < dim; ++i) {
      LieElement e = a.basis_element(a.basis()[i]);
      for (int r = 0; r < cur.rows(); ++r) {
        std::map<int, Rational> coords;
        for (int k = 0; k < dim; ++k)
          if (cur(r, k) != 0) coords[k] = cur(r, k);
        LieElement y = bracket(e, a.element_from_coords(std::move(coords)));
        if (!y.is_zero()) images.push_back(std::move(y));
      }
    }
    QMatrix stacked(int(images.size()), dim);
    for (int r = 0; r < int(images.size()); ++r)
      for (const auto& [k, v] : images[r].coords()) stacked(r, k) = v;
    cur = row_space_basis(stacked);
  }
  return c;
}

}  // namespace graphlie
