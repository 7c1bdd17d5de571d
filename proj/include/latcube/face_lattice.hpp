#pragma once

#include "latcube/polytope.hpp"

#include <utility>
#include <vector>

namespace latcube {

struct Face {
  std::vector<int> vertices;  // ascending vertex ids
  std::vector<int> facets;    // ascending ids of the facets containing the face
  int dim = -1;               // -1 for the empty face
};

/// All faces of a polytope, including the empty face and the polytope itself,
/// obtained by closing the facet vertex sets under intersection. Faces are
/// ordered by (dim, vertices).
class FaceLattice {
 public:
  explicit FaceLattice(const Polytope& p);

  int size() const { return static_cast<int>(faces_.size()); }
  const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Face id with exactly this (ascending) vertex set, or -1.
  int find(const std::vector<int>& vertices) const;
  std::vector<int> faces_of_dim(int k) const;
  /// Vertex pairs (v, w), v < w, of the 1-dimensional faces.
  std::vector<std::pair<int, int>> edges() const;
  /// Face a is contained in face b.
  bool contains(int b, int a) const;

 private:
  std::vector<Face> faces_;
};

/// lin(F) for the face spanned by `vertices` of P.
struct LinearSpan {
  std::vector<LatticeVector> basis;
  int dim = 0;
};

/// Basis of the differences of the given vertices (greedy, in vertex order).
LinearSpan lin_span(const Polytope& p, const std::vector<int>& vertices);
LinearSpan lin_span(const Polytope& p, const Face& face);
LinearSpan lin_span(const Polytope& p);

/// lin(F) = lin(G). False when the dimensions differ.
bool parallel(const Polytope& p, const Face& f, const Polytope& q, const Face& g);
bool parallel(const LinearSpan& a, const LinearSpan& b);

}  // namespace latcube
