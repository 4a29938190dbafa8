#ifndef GRAPHLIE_QMATRIX_HPP
#define GRAPHLIE_QMATRIX_HPP

#include <optional>
#include <vector>

#include "graphlie/rational.hpp"

namespace graphlie {

/// Dense matrix over exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);  // zero-filled
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool operator==(const QMatrix&) const = default;
  QMatrix operator*(const QMatrix& rhs) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const QMatrix& m);

/// cols - rank: the nullspace dimension.
int nullity(const QMatrix& m);

/// Nonzero rows of the reduced row echelon form; a basis of the row space.
QMatrix row_space_basis(const QMatrix& m);

/// Exact inverse; nullopt when m is not square or is singular.
std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace graphlie

#endif
