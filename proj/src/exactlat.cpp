#include "latcube/exactlat.hpp"

#include "latcube/random.hpp"

#include <string>

namespace latcube {

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, Integer(abs(v(i))));
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("no primitive direction");
  LatticeVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular matrix");
    a.row(c).swap(a.row(pivot));
    inv.row(c).swap(inv.row(pivot));
    const Rational p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const Integer det = determinant<Integer>(m);
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not unimodular (det " + det.str() + ")");
  const RationalMatrix inv = inverse(m.cast<Rational>());
  IntegerMatrix out(inv.rows(), inv.cols());
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(inv(i, j));
  return out;
}

bool lattice_basis_check(std::span<const LatticeVector> vs) {
  const auto d = static_cast<Eigen::Index>(vs.size());
  if (d == 0) throw std::invalid_argument("lattice basis check needs at least one vector");
  for (const auto& v : vs)
    if (v.size() != d)
      throw std::invalid_argument("lattice basis check needs d vectors of dimension d");
  IntegerMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) m.col(j) = vs[static_cast<std::size_t>(j)];
  const Integer det = determinant<Integer>(m);
  return det == 1 || det == -1;
}

UnimodularMap UnimodularMap::identity(int dim) {
  return {IntegerMatrix::Identity(dim, dim), LatticeVector::Zero(dim)};
}

UnimodularMap UnimodularMap::make(IntegerMatrix matrix, LatticeVector translation) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != translation.size())
    throw std::invalid_argument("unimodular map: dimension mismatch");
  const Integer det = determinant<Integer>(matrix);
  if (det != 1 && det != -1)
    throw std::invalid_argument("unimodular map: |det| != 1 (det " + det.str() + ")");
  return {std::move(matrix), std::move(translation)};
}

UnimodularMap UnimodularMap::make(IntegerMatrix matrix) {
  const auto d = matrix.rows();
  return make(std::move(matrix), LatticeVector::Zero(d));
}

LatticeVector UnimodularMap::apply(const LatticeVector& x) const {
  if (x.size() != matrix.cols()) throw std::invalid_argument("unimodular map: dimension mismatch");
  LatticeVector y = matrix * x;
  return y + translation;
}

RationalPoint UnimodularMap::apply(const RationalPoint& x) const {
  if (x.size() != matrix.cols()) throw std::invalid_argument("unimodular map: dimension mismatch");
  RationalPoint y = matrix.cast<Rational>() * x;
  return y + translation.cast<Rational>();
}

LatticeVector UnimodularMap::apply_to_normal(const LatticeVector& normal) const {
  const IntegerMatrix inv = unimodular_inverse(matrix);
  LatticeVector n = inv.transpose() * normal;
  return primitive(n);
}

UnimodularMap UnimodularMap::inverse() const {
  IntegerMatrix inv = unimodular_inverse(matrix);
  LatticeVector t = inv * translation;
  return {inv, -t};
}

UnimodularMap UnimodularMap::then(const UnimodularMap& next) const {
  IntegerMatrix m = next.matrix * matrix;
  LatticeVector t = next.matrix * translation;
  return {m, t + next.translation};
}

UnimodularMap random_unimodular(int dim, std::uint64_t seed, int bound) {
  if (dim < 1) throw std::invalid_argument("random_unimodular: dimension must be >= 1");
  Rng rng(seed);
  IntegerMatrix m = IntegerMatrix::Identity(dim, dim);
  static constexpr int kCoefficients[] = {-2, -1, 1, 2};
  for (int r = 0; r < bound; ++r) {
    if (dim == 1) {
      m = -m;
      continue;
    }
    const auto i = static_cast<Eigen::Index>(rng.uniform(0, dim - 1));
    auto j = static_cast<Eigen::Index>(rng.uniform(0, dim - 2));
    if (j >= i) ++j;
    const int c = kCoefficients[rng.uniform(0, 3)];
    m.row(i) += Integer(c) * m.row(j);
  }
  return {m, LatticeVector::Zero(dim)};
}

ColumnEchelon column_echelon(const IntegerMatrix& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  ColumnEchelon out{a, IntegerMatrix::Identity(cols, cols), 0};
  IntegerMatrix& e = out.echelon;
  IntegerMatrix& t = out.transform;
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < rows && p < cols; ++i) {
    while (true) {
      // Smallest nonzero |entry| of row i among columns >= p becomes the pivot.
      Eigen::Index best = -1;
      for (Eigen::Index j = p; j < cols; ++j)
        if (e(i, j) != 0 && (best < 0 || abs(e(i, j)) < abs(e(i, best)))) best = j;
      if (best < 0) break;
      if (best != p) {
        e.col(p).swap(e.col(best));
        t.col(p).swap(t.col(best));
      }
      bool done = true;
      for (Eigen::Index j = p + 1; j < cols; ++j) {
        if (e(i, j) == 0) continue;
        const Integer q = e(i, j) / e(i, p);
        e.col(j) -= q * e.col(p);
        t.col(j) -= q * t.col(p);
        if (e(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (e(i, p) != 0) ++p;
  }
  out.rank = static_cast<int>(p);
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  const ColumnEchelon ce = column_echelon(a);
  return ce.transform.rightCols(a.cols() - ce.rank);
}

IntegerMatrix complete_to_unimodular(const IntegerMatrix& basis) {
  const Eigen::Index d = basis.rows(), k = basis.cols();
  if (k > d) throw std::invalid_argument("complete_to_unimodular: more columns than rows");
  if (k == 0) return IntegerMatrix::Identity(d, d);
  const IntegerMatrix bt = basis.transpose();
  const ColumnEchelon ce = column_echelon(bt);
  if (ce.rank != k) throw std::invalid_argument("complete_to_unimodular: dependent columns");
  // bt * T = [H | 0]  =>  basis = V[:, :k] * H^T with V = T^{-T}.
  const IntegerMatrix h = ce.echelon.leftCols(k);
  const Integer det = determinant<Integer>(h);
  if (det != 1 && det != -1)
    throw std::invalid_argument("complete_to_unimodular: sublattice is not saturated");
  const IntegerMatrix v = unimodular_inverse(ce.transform).transpose();
  IntegerMatrix u = v;
  u.leftCols(k) = v.leftCols(k) * h.transpose();
  return u;
}

IntegerMatrix unimodular_with_last_row(const LatticeVector& row) {
  const Eigen::Index d = row.size();
  if (content(row) != 1) throw std::invalid_argument("unimodular_with_last_row: row is not primitive");
  IntegerMatrix col = row;
  const IntegerMatrix u = complete_to_unimodular(col).transpose();
  IntegerMatrix m(d, d);
  for (Eigen::Index i = 0; i + 1 < d; ++i) m.row(i) = u.row(i + 1);
  m.row(d - 1) = u.row(0);
  return m;
}

}  // namespace latcube
