#include "hull.hpp"

#include "latcube/exactlat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace latcube::detail {

namespace {

IntegerMatrix difference_rows(std::span<const RationalPoint> points, std::span<const int> selection) {
  const auto d = points[static_cast<std::size_t>(selection[0])].size();
  IntegerMatrix m(static_cast<Eigen::Index>(selection.size()) - 1, d);
  const RationalPoint& base = points[static_cast<std::size_t>(selection[0])];
  for (std::size_t i = 1; i < selection.size(); ++i) {
    RationalPoint diff = points[static_cast<std::size_t>(selection[i])] - base;
    m.row(static_cast<Eigen::Index>(i) - 1) = clear_denominators(diff).transpose();
  }
  return m;
}

/// Greedy maximal affinely independent subset of `candidates`, seeded with `seed`.
std::vector<int> independent_subset(std::span<const RationalPoint> points, std::vector<int> seed,
                                    std::span<const int> candidates, int target) {
  int dim = affine_dimension(points, seed);
  for (int c : candidates) {
    if (dim >= target) break;
    if (std::find(seed.begin(), seed.end(), c) != seed.end()) continue;
    seed.push_back(c);
    const int next = affine_dimension(points, seed);
    if (next > dim) {
      dim = next;
    } else {
      seed.pop_back();
    }
  }
  return seed;
}

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

struct FacetKeyLess {
  bool operator()(const std::pair<LatticeVector, Rational>& a,
                  const std::pair<LatticeVector, Rational>& b) const {
    if (lex_less(a.first, b.first)) return true;
    if (lex_less(b.first, a.first)) return false;
    return a.second < b.second;
  }
};

struct Builder {
  std::span<const RationalPoint> pts;
  int k;
  RationalPoint interior;
  std::vector<HullFacet> facets;
  std::vector<int> inserted;

  HullFacet make_facet(std::span<const int> through) const {
    HullFacet f;
    f.normal = hyperplane_normal(pts, through);
    f.offset = dot(f.normal, pts[static_cast<std::size_t>(through[0])]);
    if (dot(f.normal, interior) > f.offset) {
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    return f;
  }

  void collect_points(HullFacet& f) const {
    f.points.clear();
    for (int i : inserted)
      if (dot(f.normal, pts[static_cast<std::size_t>(i)]) == f.offset) f.points.push_back(i);
  }

  void insert(int p) {
    const RationalPoint& x = pts[static_cast<std::size_t>(p)];
    std::vector<int> side(facets.size());
    bool any_visible = false;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const Rational s = dot(facets[i].normal, x) - facets[i].offset;
      side[i] = s > 0 ? 1 : (s == 0 ? 0 : -1);
      any_visible = any_visible || side[i] > 0;
    }
    insert_sorted(inserted, p);
    if (!any_visible) {
      for (std::size_t i = 0; i < facets.size(); ++i)
        if (side[i] == 0) insert_sorted(facets[i].points, p);
      return;
    }

    std::map<std::pair<LatticeVector, Rational>, HullFacet, FacetKeyLess> fresh;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] <= 0) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (side[g] >= 0) continue;
        std::vector<int> common;
        std::set_intersection(facets[f].points.begin(), facets[f].points.end(),
                              facets[g].points.begin(), facets[g].points.end(),
                              std::back_inserter(common));
        if (static_cast<int>(common.size()) < k - 1) continue;
        if (affine_dimension(pts, common) != k - 2) continue;
        std::vector<int> through = independent_subset(pts, {p}, common, k - 1);
        HullFacet nf = make_facet(through);
        fresh.emplace(std::make_pair(nf.normal, nf.offset), std::move(nf));
      }
    }

    std::vector<HullFacet> next;
    next.reserve(facets.size() + fresh.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (side[i] > 0) continue;
      if (side[i] == 0) insert_sorted(facets[i].points, p);
      next.push_back(std::move(facets[i]));
    }
    for (auto& [key, nf] : fresh) {
      collect_points(nf);
      next.push_back(std::move(nf));
    }
    facets = std::move(next);
  }
};

}  // namespace

int affine_dimension(std::span<const RationalPoint> points, std::span<const int> selection) {
  if (selection.empty()) return -1;
  if (selection.size() == 1) return 0;
  return rank<Integer>(difference_rows(points, selection));
}

int affine_dimension(std::span<const RationalPoint> points) {
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return affine_dimension(points, all);
}

LatticeVector hyperplane_normal(std::span<const RationalPoint> points, std::span<const int> selection) {
  const IntegerMatrix diffs = difference_rows(points, selection);
  const Eigen::Index k = diffs.cols();
  if (diffs.rows() != k - 1)
    throw std::logic_error("hyperplane_normal: need exactly k points in dimension k");
  LatticeVector n(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    IntegerMatrix minor(k - 1, k - 1);
    for (Eigen::Index c = 0, mc = 0; c < k; ++c) {
      if (c == j) continue;
      minor.col(mc++) = diffs.col(c);
    }
    const Integer cof = determinant<Integer>(minor);
    n(j) = (j % 2 == 0) ? cof : Integer(-cof);
  }
  return primitive(n);
}

Hull convex_hull(std::span<const RationalPoint> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  const auto k = static_cast<int>(points[0].size());
  Hull hull;

  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(points.size()); ++i) {
      if (points[static_cast<std::size_t>(i)](0) < points[static_cast<std::size_t>(lo)](0)) lo = i;
      if (points[static_cast<std::size_t>(hi)](0) < points[static_cast<std::size_t>(i)](0)) hi = i;
    }
    if (lo == hi) throw std::invalid_argument("convex hull: points are not full-dimensional");
    hull.vertices = {std::min(lo, hi), std::max(lo, hi)};
    hull.facets.push_back({lattice_vector({-1}), -points[static_cast<std::size_t>(lo)](0), {lo}});
    hull.facets.push_back({lattice_vector({1}), points[static_cast<std::size_t>(hi)](0), {hi}});
    return hull;
  }

  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> simplex = independent_subset(points, {0}, all, k);
  if (static_cast<int>(simplex.size()) != k + 1)
    throw std::invalid_argument("convex hull: points are not full-dimensional");

  Builder b{points, k, RationalPoint::Zero(k), {}, {}};
  for (int i : simplex) b.interior += points[static_cast<std::size_t>(i)];
  b.interior /= Rational(k + 1);
  b.inserted = simplex;
  std::sort(b.inserted.begin(), b.inserted.end());
  for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
    std::vector<int> through;
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != omit) through.push_back(simplex[i]);
    HullFacet f = b.make_facet(through);
    b.collect_points(f);
    b.facets.push_back(std::move(f));
  }
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (std::find(simplex.begin(), simplex.end(), i) == simplex.end()) b.insert(i);

  // A hull point is a vertex iff the normals of its facets have full rank.
  std::vector<std::vector<int>> point_facets(points.size());
  for (std::size_t f = 0; f < b.facets.size(); ++f)
    for (int p : b.facets[f].points) point_facets[static_cast<std::size_t>(p)].push_back(static_cast<int>(f));
  for (int p = 0; p < static_cast<int>(points.size()); ++p) {
    const auto& fs = point_facets[static_cast<std::size_t>(p)];
    if (static_cast<int>(fs.size()) < k) continue;
    IntegerMatrix normals(static_cast<Eigen::Index>(fs.size()), k);
    for (std::size_t r = 0; r < fs.size(); ++r)
      normals.row(static_cast<Eigen::Index>(r)) = b.facets[static_cast<std::size_t>(fs[r])].normal.transpose();
    if (rank<Integer>(normals) == k) hull.vertices.push_back(p);
  }
  for (auto& f : b.facets) {
    std::vector<int> kept;
    std::set_intersection(f.points.begin(), f.points.end(), hull.vertices.begin(), hull.vertices.end(),
                          std::back_inserter(kept));
    f.points = std::move(kept);
  }
  hull.facets = std::move(b.facets);
  return hull;
}

}  // namespace latcube::detail
