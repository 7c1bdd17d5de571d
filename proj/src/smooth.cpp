#include "latcube/smooth.hpp"

#include <stdexcept>

namespace latcube {

namespace {

void require_full(const Polytope& p) {
  if (!p.is_full_dimensional()) throw std::invalid_argument("polytope must be full-dimensional");
}

}  // namespace

bool is_simple(const Polytope& p, const FaceLattice& lattice) {
  require_full(p);
  std::vector<int> degree(static_cast<std::size_t>(p.num_vertices()), 0);
  for (auto [a, b] : lattice.edges()) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  for (int deg : degree)
    if (deg != p.dim()) return false;
  return true;
}

bool is_simple(const Polytope& p) { return is_simple(p, FaceLattice(p)); }

VertexStar vertex_star(const Polytope& p, const FaceLattice& lattice, int v) {
  VertexStar star;
  star.vertex = v;
  star.point = p.vertices()[static_cast<std::size_t>(v)];
  for (auto [a, b] : lattice.edges()) {
    if (a == v) star.neighbors.push_back(b);
    if (b == v) star.neighbors.push_back(a);
  }
  std::sort(star.neighbors.begin(), star.neighbors.end());
  for (int w : star.neighbors) {
    const RationalPoint diff = p.vertices()[static_cast<std::size_t>(w)] - star.point;
    star.edge_dirs.push_back(primitive(clear_denominators(diff)));
  }
  return star;
}

VertexStar vertex_star(const Polytope& p, int v) { return vertex_star(p, FaceLattice(p), v); }

SmoothnessResult is_smooth(const Polytope& p, const FaceLattice& lattice) {
  if (!p.is_lattice()) throw std::invalid_argument("not a lattice polytope");
  require_full(p);
  SmoothnessResult r;
  for (int v = 0; v < p.num_vertices(); ++v) {
    const VertexStar star = vertex_star(p, lattice, v);
    if (static_cast<int>(star.edge_dirs.size()) != p.dim()) {
      r.failing_vertex = v;
      r.reason = "vertex " + to_string(star.point) + " lies on " + std::to_string(star.edge_dirs.size()) +
                 " edges";
      return r;
    }
    if (!lattice_basis_check(star.edge_dirs)) {
      r.failing_vertex = v;
      const Integer det = determinant<Integer>(stack_rows<Integer>(star.edge_dirs, p.dim()));
      r.reason = "edge directions at " + to_string(star.point) + " have determinant " + to_string(det);
      return r;
    }
  }
  r.smooth = true;
  return r;
}

SmoothnessResult is_smooth(const Polytope& p) { return is_smooth(p, FaceLattice(p)); }

StandardPosition standard_position(const CubeStructure& c) {
  const Polytope& p = c.polytope();
  const SmoothnessResult s = is_smooth(p, c.lattice());
  if (!s) throw std::invalid_argument("standard_position: cube is not smooth (" + s.reason + ")");
  const int d = c.dim();
  const int base = c.base_vertex();
  const LatticeVector origin = to_lattice(p.vertices()[static_cast<std::size_t>(base)]);
  IntegerMatrix edges(d, d);
  for (int axis = 1; axis <= d; ++axis) {
    const int w = c.vertex_with_bits(1u << (axis - 1));
    const RationalPoint diff = p.vertices()[static_cast<std::size_t>(w)] - to_rational(origin);
    edges.col(axis - 1) = primitive(clear_denominators(diff));
  }
  const IntegerMatrix m = unimodular_inverse(edges);
  const UnimodularMap map = UnimodularMap::make(m, LatticeVector(-(m * origin)));
  auto cube = recognize_cube(apply_unimodular(map, p), std::max(d, 1));
  if (!cube) throw std::logic_error("standard_position: image is not recognized as a cube");
  for (int axis = 1; axis <= d; ++axis) {
    const Facet& f = cube->polytope().facets()[static_cast<std::size_t>(cube->lower_facet(axis))];
    if (f.normal != LatticeVector(-unit_vector(d, axis - 1)) || f.offset != 0)
      throw std::logic_error("standard_position: primary facet is not a coordinate hyperplane");
  }
  return {std::move(*cube), map};
}

}  // namespace latcube
