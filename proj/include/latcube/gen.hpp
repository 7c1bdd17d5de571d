#pragma once

#include "latcube/cubeface.hpp"
#include "latcube/exactlat.hpp"
#include "latcube/polytope.hpp"

#include <cstdint>
#include <string>

namespace latcube {

/// Generator parameters. Before scrambling every coordinate lies in
/// [0, coord_bound]; scrambling multiplies by a matrix of infinity-norm at most
/// 3^scramble_rounds and adds a translation in [-coord_bound, coord_bound], so
/// outputs satisfy |x_i| <= (3^scramble_rounds + 1) * coord_bound.
struct GenParams {
  int dim = 2;
  long long coord_bound = 4;
  int scramble_rounds = 2;
  std::uint64_t seed = 1;
};

/// Bound on |coordinate| of scrambled generator output.
Integer coordinate_bound(const GenParams& p);

struct GeneratedPolytope {
  Polytope polytope;
  std::string construction;
  int rejected = 0;  // generate-and-test rejections
};

/// Trapezoid conv{(0,0),(w0,0),(0,h),(w1,h)} with h | (w1 - w0), not scrambled.
Polytope smooth_trapezoid(long long w0, long long w1, long long h);

/// Random smooth 2-cube, scrambled.
GeneratedPolytope gen_smooth_2cube(const GenParams& p);

/// Smooth (d+1)-polytope over the smooth full-dimensional base: the top is a
/// fan-preserving deformation of the base at height h, joined by lift edges
/// with primitive directions (u, 1). Candidates that are not smooth, not
/// prismatoids (not cubes when `require_cube`), or exceed the coordinate
/// bound are rejected; after the budget the sheared prism is returned.
GeneratedPolytope gen_smooth_lift(const Polytope& base, const GenParams& p, bool require_cube);

/// gen_smooth_lift of a cube, required to be a cube.
GeneratedPolytope gen_smooth_cube_lift(const CubeStructure& base, const GenParams& p);

/// Random smooth d-cube for d = 2..4, scrambled.
GeneratedPolytope gen_smooth_cube(const GenParams& p);

/// Smooth polygon: a rectangle with some corners cut by unit triangles.
Polytope cut_rectangle(long long width, long long height, unsigned corners);

/// Random smooth d-prismatoid (d = 3, 4) over a cut rectangle (or a
/// lifted cut rectangle), scrambled.
GeneratedPolytope gen_smooth_prismatoid(const GenParams& p);

/// conv{0, e1, e2, (1,1,q)}.
Polytope reeve_simplex(long long q);

/// Map used by scramble(P, p).
UnimodularMap scramble_map(const GenParams& p);
Polytope scramble(const Polytope& poly, const GenParams& p);

/// Random polytope with the same normal fan as the smooth polytope P, by
/// moving facet offsets; falls back to 2P.
GeneratedPolytope equivalent_partner(const Polytope& poly, std::uint64_t seed);

}  // namespace latcube
