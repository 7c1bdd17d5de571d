#pragma once

#include "latcube/types.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

namespace latcube {

/// gcd of the absolute values of the coordinates (0 for the zero vector).
Integer content(const LatticeVector& v);

/// v / content(v). Throws std::invalid_argument("no primitive direction") on 0.
LatticeVector primitive(const LatticeVector& v);

/// Determinant by fraction-free (Bareiss) elimination. Exact for Integer and
/// Rational scalars; every division in the recurrence is exact.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Rank by fraction-free row reduction.
template <typename Scalar>
int rank(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.row(r).swap(m.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar a = m(r, c), b = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) = m(i, j) * a - m(r, j) * b;
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Stacks vectors as the rows of a matrix.
template <typename Scalar>
Matrix<Scalar> stack_rows(std::span<const Vector<Scalar>> vs, Eigen::Index cols) {
  Matrix<Scalar> m(static_cast<Eigen::Index>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return m;
}

/// Inverse of a nonsingular matrix by exact Gauss-Jordan over Q.
RationalMatrix inverse(const RationalMatrix& m);

/// Inverse of an integer matrix with determinant +-1; throws otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// true iff the d vectors (each of dimension d) have |det| = 1.
/// Throws std::invalid_argument on a wrong count or dimension.
bool lattice_basis_check(std::span<const LatticeVector> vs);

/// x -> matrix * x + translation with |det(matrix)| = 1.
struct UnimodularMap {
  IntegerMatrix matrix;
  LatticeVector translation;

  static UnimodularMap identity(int dim);
  /// Validates |det| = 1 and matching dimensions.
  static UnimodularMap make(IntegerMatrix matrix, LatticeVector translation);
  static UnimodularMap make(IntegerMatrix matrix);

  int dim() const { return static_cast<int>(matrix.rows()); }
  LatticeVector apply(const LatticeVector& x) const;
  RationalPoint apply(const RationalPoint& x) const;
  /// Image of an outward facet normal: the inverse transpose, made primitive.
  LatticeVector apply_to_normal(const LatticeVector& normal) const;
  UnimodularMap inverse() const;
  /// this followed by `next`.
  UnimodularMap then(const UnimodularMap& next) const;

  friend bool operator==(const UnimodularMap& a, const UnimodularMap& b) {
    return a.matrix == b.matrix && a.translation == b.translation;
  }
};

/// Product of `bound` elementary shears E = I + c * e_i e_j^T (i != j,
/// c in {-2,-1,1,2}) applied on the left, drawn from Rng(seed); for d = 1
/// each factor is the negation. Every factor has determinant +-1 and
/// max-row-sum norm <= 3, so every entry of the product is bounded by 3^bound.
UnimodularMap random_unimodular(int dim, std::uint64_t seed, int bound);

/// Column reduction over Z: returns (E, T) with A * T = E, T unimodular and
/// exactly the first `rank` columns of E nonzero.
struct ColumnEchelon {
  IntegerMatrix echelon;
  IntegerMatrix transform;
  int rank = 0;
};
ColumnEchelon column_echelon(const IntegerMatrix& a);

/// Columns form a basis of the integer kernel {x in Z^n : A x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Unimodular d x d matrix whose first k columns are `basis`. The columns of
/// `basis` must span a saturated sublattice (lin(basis) cap Z^d); throws
/// std::invalid_argument otherwise.
IntegerMatrix complete_to_unimodular(const IntegerMatrix& basis);

/// Unimodular matrix whose last row is the primitive vector `row`.
IntegerMatrix unimodular_with_last_row(const LatticeVector& row);

}  // namespace latcube
