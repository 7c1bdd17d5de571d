#pragma once

#include "latcube/types.hpp"

#include <span>
#include <vector>

namespace latcube::detail {

struct HullFacet {
  LatticeVector normal;  // primitive, outward
  Rational offset;       // <normal, x> <= offset on the hull
  std::vector<int> points;  // indices of input points on the facet, ascending
};

struct Hull {
  std::vector<int> vertices;  // indices of input points that are vertices, ascending
  std::vector<HullFacet> facets;
};

/// Affine rank (dimension of the affine hull) of the selected points; -1 when
/// the selection is empty.
int affine_dimension(std::span<const RationalPoint> points, std::span<const int> selection);
int affine_dimension(std::span<const RationalPoint> points);

/// Primitive integer normal of the hyperplane through k affinely independent
/// points of Q^k (sign unspecified).
LatticeVector hyperplane_normal(std::span<const RationalPoint> points, std::span<const int> selection);

/// Exact incremental (beneath-beyond) hull of distinct, full-dimensional
/// points in Q^k, k >= 1.
Hull convex_hull(std::span<const RationalPoint> points);

}  // namespace latcube::detail
