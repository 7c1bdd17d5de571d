#pragma once

#include "latcube/polytope.hpp"

#include <optional>
#include <vector>

namespace latcube {

/// Normal cone of a vertex, generated by the normals of its facets.
struct VertexCone {
  int apex = 0;
  std::vector<LatticeVector> generators;  // lexicographically sorted
};

/// The fan as its maximal cones, one per vertex.
std::vector<VertexCone> normal_fan(const Polytope& p);

/// Face-poset bijection induced by equal normal fans. Facets correspond by
/// equal normal; vertices by equal cone.
struct FanCorrespondence {
  std::vector<int> vertex_map;  // vertex of P -> vertex of Q
  std::vector<int> facet_map;   // facet of P -> facet of Q
};

/// Equal normal fans. Both polytopes must be full-dimensional in a common
/// ambient space (std::invalid_argument otherwise).
std::optional<FanCorrespondence> fan_correspondence(const Polytope& p, const Polytope& q);
bool minkowski_equivalent(const Polytope& p, const Polytope& q);

struct SeparationCertificate {
  LatticeVector normal;
  Rational max_on_first;
  Rational min_on_second;
  int facet = -1;  // facet of the first polytope with this normal
};

/// Facet normal y of P with max_P <y,x> < min_Q <y,x>, for disjoint P and Q
/// with P Minkowski equivalent to -Q. Among separating facet normals the one
/// with the widest gap is returned (first in facet order on ties).
///
/// Throws std::invalid_argument("not disjoint") if P and Q meet,
/// std::invalid_argument if P and -Q are not Minkowski equivalent, and
/// std::logic_error("lemma violation") if no facet normal separates.
SeparationCertificate separating_facet_hyperplane(const Polytope& p, const Polytope& q);

/// P and Q share a point (exact test on 0 in conv(P - Q)).
bool intersects(const Polytope& p, const Polytope& q);

}  // namespace latcube
