#include "latcube/polytope.hpp"

#include "hull.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latcube {

namespace {

struct Frame {
  RationalPoint origin;
  IntegerMatrix to_local;   // k x d: local coordinates of x - origin
  IntegerMatrix equations;  // (d-k) x d, annihilates the affine hull's directions
};

/// Lattice-preserving frame of the affine hull of `points` (affine dimension k).
Frame make_frame(std::span<const RationalPoint> points, int k) {
  const auto d = points[0].size();
  IntegerMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i) - 1) = clear_denominators(RationalPoint(points[i] - points[0])).transpose();
  const IntegerMatrix normals = integer_kernel(diffs);          // d x (d-k)
  const IntegerMatrix basis = integer_kernel(normals.transpose());  // d x k, saturated
  if (basis.cols() != k) throw std::logic_error("affine frame: unexpected rank");
  const IntegerMatrix u = complete_to_unimodular(basis);
  const IntegerMatrix inv = unimodular_inverse(u);
  return {points[0], inv.topRows(k), inv.bottomRows(d - k)};
}

}  // namespace

bool Polytope::incident(int v, int f) const {
  const auto& fs = facet_vertices(f);
  return std::binary_search(fs.begin(), fs.end(), v);
}

int Polytope::vertex_index(const RationalPoint& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p, LexLess{});
  if (it == vertices_.end() || *it != p) return -1;
  return static_cast<int>(it - vertices_.begin());
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RationalPoint& v) { return is_integral(v); });
}

std::vector<LatticeVector> Polytope::lattice_vertices() const {
  if (!is_lattice()) throw std::invalid_argument("not a lattice polytope");
  std::vector<LatticeVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_lattice(v));
  return out;
}

bool Polytope::contains(const RationalPoint& p) const {
  if (p.size() != ambient_dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, p) != e.value) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

bool Polytope::contains(const LatticeVector& p) const { return contains(to_rational(p)); }

std::pair<LatticeVector, LatticeVector> Polytope::integer_bounds() const {
  LatticeVector lo(ambient_dim_), hi(ambient_dim_);
  for (int i = 0; i < ambient_dim_; ++i) {
    Rational mn = vertices_[0](i), mx = vertices_[0](i);
    for (const auto& v : vertices_) {
      if (v(i) < mn) mn = v(i);
      if (mx < v(i)) mx = v(i);
    }
    lo(i) = floor(mn);
    hi(i) = ceil(mx);
  }
  return {lo, hi};
}

IntegerConstraints Polytope::integer_constraints() const {
  std::vector<std::pair<LatticeVector, Integer>> rows;
  for (const auto& f : facets_) rows.emplace_back(f.normal, floor(f.offset));
  for (const auto& e : equations_) {
    if (is_integral(e.value)) {
      rows.emplace_back(e.normal, floor(e.value));
      rows.emplace_back(LatticeVector(-e.normal), -floor(e.value));
    } else {
      rows.emplace_back(LatticeVector::Zero(ambient_dim_), Integer(-1));
    }
  }
  IntegerConstraints c;
  c.a.resize(static_cast<Eigen::Index>(rows.size()), ambient_dim_);
  c.b.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    c.a.row(static_cast<Eigen::Index>(r)) = rows[r].first.transpose();
    c.b(static_cast<Eigen::Index>(r)) = rows[r].second;
  }
  std::tie(c.lower, c.upper) = integer_bounds();
  return c;
}

Polytope from_vertices(std::span<const RationalPoint> input, Embedding embedding) {
  if (input.empty()) throw std::invalid_argument("from_vertices: empty input");
  const auto d = static_cast<int>(input[0].size());
  if (d < 1) throw std::invalid_argument("from_vertices: ambient dimension must be >= 1");
  for (const auto& p : input)
    if (p.size() != d) throw std::invalid_argument("from_vertices: points of mixed dimension");

  std::vector<RationalPoint> points(input.begin(), input.end());
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const int k = detail::affine_dimension(points);
  if (k < d && embedding == Embedding::full_dimensional_only)
    throw std::invalid_argument("from_vertices: points are not full-dimensional (affine dimension " +
                                std::to_string(k) + " < " + std::to_string(d) + ")");

  Polytope poly;
  poly.ambient_dim_ = d;
  poly.dim_ = k;

  if (k == 0) {
    poly.vertices_ = {points[0]};
    for (int i = 0; i < d; ++i) poly.equations_.push_back({unit_vector(d, i), points[0](i)});
    poly.vertex_facets_.resize(1);
    return poly;
  }

  std::vector<detail::HullFacet> hull_facets;
  if (k == d) {
    detail::Hull hull = detail::convex_hull(points);
    for (int v : hull.vertices) poly.vertices_.push_back(points[static_cast<std::size_t>(v)]);
    std::vector<int> remap(points.size(), -1);
    for (std::size_t i = 0; i < hull.vertices.size(); ++i)
      remap[static_cast<std::size_t>(hull.vertices[i])] = static_cast<int>(i);
    for (auto& f : hull.facets) {
      for (int& p : f.points) p = remap[static_cast<std::size_t>(p)];
      poly.facets_.push_back({f.normal, f.offset});
    }
  } else {
    // Hull once to find the vertices, then again in a frame built from the
    // vertices alone so that the frame depends only on the vertex set.
    for (int pass = 0; pass < 2; ++pass) {
      const Frame frame = make_frame(points, k);
      std::vector<RationalPoint> local;
      local.reserve(points.size());
      const RationalMatrix to_local = frame.to_local.cast<Rational>();
      for (const auto& p : points) local.push_back(to_local * RationalPoint(p - frame.origin));
      detail::Hull hull = detail::convex_hull(local);
      if (pass == 0 && hull.vertices.size() != points.size()) {
        std::vector<RationalPoint> kept;
        for (int v : hull.vertices) kept.push_back(points[static_cast<std::size_t>(v)]);
        points = std::move(kept);
        continue;
      }
      poly.vertices_ = points;
      for (const auto& f : hull.facets) {
        LatticeVector normal = frame.to_local.transpose() * f.normal;
        Rational offset = f.offset + dot(normal, frame.origin);
        poly.facets_.push_back({normal, offset});
      }
      for (Eigen::Index r = 0; r < frame.equations.rows(); ++r) {
        LatticeVector n = frame.equations.row(r).transpose();
        poly.equations_.push_back({n, dot(n, frame.origin)});
      }
      break;
    }
  }

  std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& a, const Facet& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
  });
  const int nv = poly.num_vertices(), nf = poly.num_facets();
  poly.facet_vertices_.assign(static_cast<std::size_t>(nf), {});
  poly.vertex_facets_.assign(static_cast<std::size_t>(nv), {});
  for (int f = 0; f < nf; ++f) {
    const Facet& facet = poly.facets_[static_cast<std::size_t>(f)];
    for (int v = 0; v < nv; ++v) {
      const Rational s = dot(facet.normal, poly.vertices_[static_cast<std::size_t>(v)]);
      if (s > facet.offset) throw std::logic_error("from_vertices: vertex violates a facet inequality");
      if (s == facet.offset) {
        poly.facet_vertices_[static_cast<std::size_t>(f)].push_back(v);
        poly.vertex_facets_[static_cast<std::size_t>(v)].push_back(f);
      }
    }
  }

  // V/H cross-validation.
  for (std::size_t f = 0; f + 1 < poly.facets_.size(); ++f)
    if (poly.facets_[f].normal == poly.facets_[f + 1].normal)
      throw std::logic_error("from_vertices: repeated facet normal");
  for (const auto& e : poly.equations_)
    for (const auto& v : poly.vertices_)
      if (dot(e.normal, v) != e.value) throw std::logic_error("from_vertices: vertex off the affine hull");
  for (int f = 0; f < nf; ++f) {
    const auto& fv = poly.facet_vertices_[static_cast<std::size_t>(f)];
    if (detail::affine_dimension(poly.vertices_, fv) != k - 1)
      throw std::logic_error("from_vertices: facet of wrong dimension");
  }
  for (int v = 0; v < nv; ++v)
    if (static_cast<int>(poly.vertex_facets_[static_cast<std::size_t>(v)].size()) < k)
      throw std::logic_error("from_vertices: vertex on fewer than dim facets");
  return poly;
}

Polytope from_vertices(std::span<const LatticeVector> points, Embedding embedding) {
  std::vector<RationalPoint> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return from_vertices(q, embedding);
}

Polytope from_vertices(std::initializer_list<std::initializer_list<long long>> points,
                       Embedding embedding) {
  std::vector<RationalPoint> q;
  for (const auto& p : points) q.push_back(to_rational(lattice_vector(p)));
  return from_vertices(q, embedding);
}

namespace {
template <typename F>
Polytope map_vertices(const Polytope& p, F&& f) {
  std::vector<RationalPoint> out;
  out.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) out.push_back(f(v));
  return from_vertices(out, p.is_full_dimensional() ? Embedding::full_dimensional_only
                                                    : Embedding::allow_lower_dimensional);
}
}  // namespace

Polytope translate(const Polytope& p, const RationalPoint& t) {
  if (t.size() != p.ambient_dim()) throw std::invalid_argument("translate: dimension mismatch");
  return map_vertices(p, [&](const RationalPoint& v) { return RationalPoint(v + t); });
}

Polytope translate(const Polytope& p, const LatticeVector& t) { return translate(p, to_rational(t)); }

Polytope dilate(const Polytope& p, const Rational& k) {
  if (k <= 0) throw std::invalid_argument("dilate: factor must be positive");
  return map_vertices(p, [&](const RationalPoint& v) { return RationalPoint(v * k); });
}

Polytope negate(const Polytope& p) {
  return map_vertices(p, [](const RationalPoint& v) { return RationalPoint(-v); });
}

Polytope apply_unimodular(const UnimodularMap& u, const Polytope& p) {
  if (u.dim() != p.ambient_dim()) throw std::invalid_argument("apply_unimodular: dimension mismatch");
  return map_vertices(p, [&](const RationalPoint& v) { return u.apply(v); });
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  return all_lattice_points(p.integer_constraints());
}

}  // namespace latcube
