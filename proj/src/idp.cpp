#include "latcube/idp.hpp"

#include "latcube/exactlat.hpp"
#include "latcube/normal_fan.hpp"
#include "latcube/smooth.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcube {

namespace {

void require_lattice_pair(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("idp: dimension mismatch");
  if (!p.is_lattice() || !q.is_lattice()) throw std::invalid_argument("not a lattice polytope");
}

void add_counterexample(IdpReport& r, const Polytope& p, const Polytope& q, const LatticeVector& a) {
  r.verdict = false;
  if (r.counterexamples.size() < IdpReport::kMaxCounterexamples)
    r.counterexamples.push_back({a, region_point(p, q, a)});
}

/// Membership in Q for integer points on int64 when the data fits.
class LatticeMembership {
 public:
  explicit LatticeMembership(const Polytope& q) : c_(q.integer_constraints()) {
    small_ = true;
    for (Eigen::Index i = 0; i < c_.a.size() && small_; ++i) small_ = abs(c_.a(i)) < (1 << 20);
    for (Eigen::Index i = 0; i < c_.b.size() && small_; ++i) small_ = abs(c_.b(i)) < (1LL << 40);
    if (small_) {
      a_ = c_.a.unaryExpr([](const Integer& x) { return x.convert_to<long long>(); });
      b_ = c_.b.unaryExpr([](const Integer& x) { return x.convert_to<long long>(); });
    }
  }

  /// x - y in Q, for small coordinates.
  bool contains_difference(const Vector<long long>& x, const Vector<long long>& y) const {
    for (Eigen::Index r = 0; r < a_.rows(); ++r) {
      long long s = 0;
      for (Eigen::Index j = 0; j < a_.cols(); ++j) s += a_(r, j) * (x(j) - y(j));
      if (s > b_(r)) return false;
    }
    return true;
  }

  bool contains(const LatticeVector& x) const {
    IntegerConstraints c = c_;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      c.lower(i) = std::min(c.lower(i), x(i));
      c.upper(i) = std::max(c.upper(i), x(i));
    }
    return c.satisfied_by(x);
  }

  bool small() const { return small_; }

 private:
  IntegerConstraints c_;
  Matrix<long long> a_;
  Vector<long long> b_;
  bool small_ = false;
};

bool fits_small(const LatticeVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (abs(v(i)) >= (1 << 20)) return false;
  return true;
}

Vector<long long> to_small(const LatticeVector& v) {
  return v.unaryExpr([](const Integer& x) { return x.convert_to<long long>(); });
}

}  // namespace

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RationalPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return from_vertices(sums, Embedding::allow_lower_dimensional);
}

IntegerConstraints decomposition_region(const Polytope& p, const Polytope& q, const LatticeVector& a) {
  const IntegerConstraints cp = p.integer_constraints();
  const IntegerConstraints cq = q.integer_constraints();
  IntegerConstraints r;
  const Eigen::Index n = p.ambient_dim();
  r.a.resize(cp.a.rows() + cq.a.rows(), n);
  r.a << cp.a, IntegerMatrix(-cq.a);
  r.b.resize(r.a.rows());
  r.b << cp.b, LatticeVector(cq.b - cq.a * a);
  r.lower = cp.lower.cwiseMax(LatticeVector(a - cq.upper));
  r.upper = cp.upper.cwiseMin(LatticeVector(a - cq.lower));
  return r;
}

std::optional<RationalPoint> region_point(const Polytope& p, const Polytope& q, const LatticeVector& a) {
  // Exact halfspaces of R_a: facets and equations of P, and of a - Q.
  std::vector<LatticeVector> normals;
  std::vector<Rational> offsets;
  std::vector<bool> equality;
  for (const auto& f : p.facets()) normals.push_back(f.normal), offsets.push_back(f.offset), equality.push_back(false);
  for (const auto& e : p.equations()) normals.push_back(e.normal), offsets.push_back(e.value), equality.push_back(true);
  const RationalPoint ar = to_rational(a);
  for (const auto& f : q.facets())
    normals.push_back(-f.normal), offsets.push_back(f.offset - dot(f.normal, ar)), equality.push_back(false);
  for (const auto& e : q.equations())
    normals.push_back(e.normal), offsets.push_back(dot(e.normal, ar) - e.value), equality.push_back(true);

  const int n = p.ambient_dim();
  const int m = static_cast<int>(normals.size());
  auto feasible = [&](const RationalPoint& x) {
    for (int i = 0; i < m; ++i) {
      const Rational s = dot(normals[static_cast<std::size_t>(i)], x);
      const Rational& c = offsets[static_cast<std::size_t>(i)];
      if (equality[static_cast<std::size_t>(i)] ? s != c : s > c) return false;
    }
    return true;
  };
  // The region is a bounded polytope: if nonempty it has a vertex, which is
  // the unique solution of n linearly independent tight constraints.
  std::vector<int> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (m < n) return std::nullopt;
  while (true) {
    RationalMatrix lhs(n, n);
    RationalPoint rhs(n);
    for (int i = 0; i < n; ++i) {
      lhs.row(i) = normals[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].cast<Rational>().transpose();
      rhs(i) = offsets[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    }
    if (determinant<Rational>(lhs) != 0) {
      const RationalPoint x = inverse(lhs) * rhs;
      if (feasible(x)) return x;
    }
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

IdpReport is_idp_pair_bruteforce(const Polytope& p, const Polytope& q) {
  require_lattice_pair(p, q);
  IdpReport r;
  r.method = "bruteforce";
  const Polytope sum = minkowski_sum(p, q);
  const std::vector<LatticeVector> lp = lattice_points(p);
  const LatticeMembership in_q(q);
  bool small = in_q.small();
  for (const auto& x : lp) small = small && fits_small(x);
  std::vector<Vector<long long>> lp_small;
  if (small)
    for (const auto& x : lp) lp_small.push_back(to_small(x));

  scan_lattice_points(sum.integer_constraints(), [&](const LatticeVector& x) {
    ++r.regions_checked;
    std::optional<std::size_t> found;
    if (small && fits_small(x)) {
      const Vector<long long> xs = to_small(x);
      for (std::size_t i = 0; i < lp_small.size() && !found; ++i)
        if (in_q.contains_difference(xs, lp_small[i])) found = i;
    } else {
      for (std::size_t i = 0; i < lp.size() && !found; ++i)
        if (in_q.contains(LatticeVector(x - lp[i]))) found = i;
    }
    if (!found) {
      add_counterexample(r, p, q, x);
    } else if (r.decompositions.size() < IdpReport::kMaxDecompositions) {
      r.decompositions.push_back({x, lp[*found], LatticeVector(x - lp[*found])});
    }
    return true;
  });
  return r;
}

IdpReport is_idp_pair_regions(const Polytope& p, const Polytope& q) {
  require_lattice_pair(p, q);
  IdpReport r;
  r.method = "regions";
  const Polytope sum = minkowski_sum(p, q);
  const IntegerConstraints base = decomposition_region(p, q, LatticeVector::Zero(p.ambient_dim()));
  const IntegerConstraints cp = p.integer_constraints();
  const IntegerConstraints cq = q.integer_constraints();
  const LatticeScanner scanner(base.a);
  scan_lattice_points(sum.integer_constraints(), [&](const LatticeVector& a) {
    ++r.regions_checked;
    LatticeVector b = base.b;
    b.tail(cq.a.rows()) = cq.b - cq.a * a;
    const LatticeVector lower = cp.lower.cwiseMax(LatticeVector(a - cq.upper));
    const LatticeVector upper = cp.upper.cwiseMin(LatticeVector(a - cq.lower));
    const auto x = scanner.find(b, lower, upper);
    if (!x) {
      add_counterexample(r, p, q, a);
    } else if (r.decompositions.size() < IdpReport::kMaxDecompositions) {
      r.decompositions.push_back({a, *x, LatticeVector(a - *x)});
    }
    return true;
  });
  return r;
}

IdpReport is_idp(const Polytope& p, int extra_k) {
  if (!p.is_lattice()) throw std::invalid_argument("not a lattice polytope");
  if (extra_k < 0) throw std::invalid_argument("is_idp: extra_k must be non-negative");
  IdpReport r;
  r.method = "dilations";
  const int d = p.dim();
  const int kmax = std::max(1, d - 2) + extra_k;
  for (int k = 1; k <= kmax; ++k) {
    const IdpReport pair = is_idp_pair_regions(p, dilate(p, Rational(k)));
    r.dilations_checked.push_back(k);
    r.regions_checked += pair.regions_checked;
    if (!pair.verdict) {
      r.verdict = false;
      r.notes.push_back("(P, " + std::to_string(k) + "P) is not IDP");
      for (const auto& c : pair.counterexamples)
        if (r.counterexamples.size() < IdpReport::kMaxCounterexamples) r.counterexamples.push_back(c);
    }
    for (const auto& dec : pair.decompositions)
      if (r.decompositions.size() < IdpReport::kMaxDecompositions) r.decompositions.push_back(dec);
  }
  r.notes.push_back("k >= " + std::to_string(std::max(1, d - 1)) + " holds for every lattice polytope of dimension " +
                    std::to_string(d));
  return r;
}

IdpReport idp_cube_pair(const CubeStructure& c, const CubeStructure& c2) {
  const Polytope& p = c.polytope();
  const Polytope& q = c2.polytope();
  if (p.ambient_dim() != q.ambient_dim() || !p.is_lattice() || !q.is_lattice() ||
      !is_smooth(p, c.lattice()) || !is_smooth(q, c2.lattice()) || !minkowski_equivalent(p, q))
    throw std::invalid_argument("not Minkowski-equivalent smooth cubes");
  return is_idp_pair_regions(p, q);
}

}  // namespace latcube
