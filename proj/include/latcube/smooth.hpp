#pragma once

#include "latcube/cubeface.hpp"
#include "latcube/exactlat.hpp"
#include "latcube/face_lattice.hpp"
#include "latcube/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcube {

/// Primitive directions of the edges at a vertex, ordered by neighbor id.
struct VertexStar {
  int vertex = 0;
  RationalPoint point;
  std::vector<int> neighbors;
  std::vector<LatticeVector> edge_dirs;
};

/// Throws std::invalid_argument for a lower-dimensional polytope.
bool is_simple(const Polytope& p);
bool is_simple(const Polytope& p, const FaceLattice& lattice);

VertexStar vertex_star(const Polytope& p, int v);
VertexStar vertex_star(const Polytope& p, const FaceLattice& lattice, int v);

struct SmoothnessResult {
  bool smooth = false;
  std::optional<int> failing_vertex;
  std::string reason;
  explicit operator bool() const { return smooth; }
};

/// Simple, and every vertex star is a lattice basis. Throws
/// std::invalid_argument("not a lattice polytope") on non-integral vertices.
SmoothnessResult is_smooth(const Polytope& p);
SmoothnessResult is_smooth(const Polytope& p, const FaceLattice& lattice);

struct StandardPosition {
  CubeStructure cube;
  UnimodularMap map;
};

/// Maps the base vertex to 0 and the edge along axis i to e_i. Throws
/// std::invalid_argument if the cube is not smooth.
StandardPosition standard_position(const CubeStructure& c);

}  // namespace latcube
