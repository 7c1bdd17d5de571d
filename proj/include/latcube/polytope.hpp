#pragma once

#include "latcube/exactlat.hpp"
#include "latcube/lattice_scan.hpp"
#include "latcube/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace latcube {

/// Halfspace <normal, x> <= offset; normal primitive and outward.
struct Facet {
  LatticeVector normal;
  Rational offset;
};

/// Affine equation <normal, x> = value, one per codimension of the affine hull.
struct AffineEquation {
  LatticeVector normal;
  Rational value;
};

enum class Embedding {
  full_dimensional_only,
  /// Accept lower-dimensional input; facets are computed in a lattice-preserving
  /// local frame of the affine hull and pulled back to the ambient space.
  allow_lower_dimensional,
};

/// Bounded convex polytope with exact V- and H-representation.
///
/// Vertices are sorted lexicographically; facets are sorted lexicographically
/// by normal. For full-dimensional polytopes the facet normals are the
/// canonical primitive outward normals. Lower-dimensional polytopes also carry
/// the equations of their affine hull.
class Polytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_dim_; }

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<AffineEquation>& equations() const { return equations_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_facets() const { return static_cast<int>(facets_.size()); }

  /// Vertex ids on facet f, ascending.
  const std::vector<int>& facet_vertices(int f) const { return facet_vertices_[static_cast<std::size_t>(f)]; }
  /// Facet ids through vertex v, ascending.
  const std::vector<int>& vertex_facets(int v) const { return vertex_facets_[static_cast<std::size_t>(v)]; }
  bool incident(int v, int f) const;

  /// -1 if `p` is not a vertex.
  int vertex_index(const RationalPoint& p) const;

  bool is_lattice() const;
  /// Throws std::invalid_argument("not a lattice polytope") unless integral.
  std::vector<LatticeVector> lattice_vertices() const;

  bool contains(const RationalPoint& p) const;
  bool contains(const LatticeVector& p) const;

  /// Integer bounding box [floor(min), ceil(max)] per coordinate.
  std::pair<LatticeVector, LatticeVector> integer_bounds() const;
  /// Integer points of the polytope as A x <= b plus the integer bounding box.
  IntegerConstraints integer_constraints() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope from_vertices(std::span<const RationalPoint>, Embedding);

  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<Facet> facets_;
  std::vector<AffineEquation> equations_;
  std::vector<std::vector<int>> facet_vertices_;
  std::vector<std::vector<int>> vertex_facets_;
};

/// Convex hull with facet enumeration. Duplicate and non-extreme points are
/// dropped. Throws std::invalid_argument on empty input, mixed dimensions, or
/// lower-dimensional input under Embedding::full_dimensional_only. The V/H
/// representations are cross-checked before returning (std::logic_error on
/// an inconsistency).
Polytope from_vertices(std::span<const RationalPoint> points,
                       Embedding embedding = Embedding::full_dimensional_only);
Polytope from_vertices(std::span<const LatticeVector> points,
                       Embedding embedding = Embedding::full_dimensional_only);
Polytope from_vertices(std::initializer_list<std::initializer_list<long long>> points,
                       Embedding embedding = Embedding::full_dimensional_only);

Polytope translate(const Polytope& p, const RationalPoint& t);
Polytope translate(const Polytope& p, const LatticeVector& t);
/// k * P for k > 0.
Polytope dilate(const Polytope& p, const Rational& k);
/// -P.
Polytope negate(const Polytope& p);
Polytope apply_unimodular(const UnimodularMap& u, const Polytope& p);

/// Integer points of P in lexicographic order.
std::vector<LatticeVector> lattice_points(const Polytope& p);

}  // namespace latcube
