#include "graphlie/qmatrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0)
    throw OutOfBoundsError("negative matrix dimensions");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  const QMatrix& a = *this;
  if (a.cols() != rhs.rows())
    throw OutOfBoundsError("matrix product shape mismatch: " +
                           std::to_string(a.cols()) + " vs " +
                           std::to_string(rhs.rows()));
  QMatrix c(a.rows(), rhs.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols(); ++j) {
        const Rational& bkj = rhs(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

// Rank via fraction-free Bareiss elimination: clear each row's denominators
// once (scaling rows never changes rank), then eliminate over the integers
// with exact divisions only. Keeps intermediate entries polynomially sized
// where naive integer elimination blows up.
int rank(const QMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpz_class scale;
      mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(),
                   m(i, j).get_den().get_mpz_t());
      a[i][j] = m(i, j).get_num() * scale;
    }
  }
  mpz_class prev_pivot = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev_pivot = a[r][c];
    ++r;
  }
  return r;
}

int nullity(const QMatrix& m) { return m.cols() - rank(m); }

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix row_space_basis(const QMatrix& m) {
  QMatrix work = m;
  std::vector<int> pivots = rref(work);
  QMatrix basis(int(pivots.size()), m.cols());
  for (int i = 0; i < int(pivots.size()); ++i)
    for (int j = 0; j < m.cols(); ++j) basis(i, j) = work(i, j);
  return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || (n > 0 && pivots.back() >= n))
    return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace graphlie
