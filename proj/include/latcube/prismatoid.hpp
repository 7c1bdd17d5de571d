#pragma once

#include "latcube/exactlat.hpp"
#include "latcube/face_lattice.hpp"
#include "latcube/idp.hpp"
#include "latcube/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcube {

/// Bottom and top facets with opposite normals and the vertex bijection
/// given by the lift edges.
struct PrismatoidStructure {
  int bottom_facet = -1;
  int top_facet = -1;
  LatticeVector bottom_normal;  // outward normal of the bottom
  std::vector<int> bottom_vertices;  // ascending
  std::vector<int> lift;             // lift[i]: top vertex joined to bottom_vertices[i]
};

/// Searches the pairs of facets with opposite normals: the pair with normals
/// -e_d / e_d first, then the rest in facet order. The bottom is the facet
/// with the lexicographically smaller normal. `bottom_normal` restricts the
/// search to one pair. nullopt when no pair gives a prism face lattice.
std::optional<PrismatoidStructure> detect_prismatoid(const Polytope& p,
                                                     const std::optional<LatticeVector>& bottom_normal = std::nullopt);
std::optional<PrismatoidStructure> detect_prismatoid(const Polytope& p, const FaceLattice& lattice,
                                                     const std::optional<LatticeVector>& bottom_normal = std::nullopt);

struct NormalizedPrismatoid {
  Polytope polytope;
  UnimodularMap map;
  PrismatoidStructure structure;
};

/// Unimodular image with the bottom in x_d = b and the top in x_d = b + h.
/// Smooth prismatoids are also moved so that the lexicographically smallest
/// bottom vertex is 0 with edge directions e_1, ..., e_d. Throws
/// std::invalid_argument if P is not a prismatoid.
NormalizedPrismatoid normalize_axis(const Polytope& p);

struct Slice {
  Integer level;      // l, at height b + l
  Polytope polytope;  // in R^{d-1}, x_d dropped
};

struct SliceDecomposition {
  LatticeVector axis_normal;  // e_d
  Integer bottom_height;
  Integer top_height;
  std::vector<Slice> slices;  // l = 0 .. h
};

/// Slices of a polytope whose bottom and top facets have normals -e_d and e_d.
/// Throws std::invalid_argument if those facets are missing or their heights
/// are not integers.
SliceDecomposition slices(const Polytope& p);

struct LemmaCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SliceLemmaReport {
  std::vector<LemmaCheck> checks;
  /// First non-integral slice vertex (lifted back to R^d), if any.
  std::optional<RationalPoint> non_integral_vertex;
  bool all_pass() const;
};

/// Top/bottom equivalence, slice integrality, slice dimension, slice
/// equivalence with the bottom, and the per-edge slice formula for smooth
/// input. Non-smooth input is accepted and reported on.
SliceLemmaReport verify_slice_lemmas(const Polytope& p);

/// IDP of (P, P') from the slice pairs (S_l, S'_m), cross-checked against the
/// region checker on the full pair. Throws std::invalid_argument unless P and
/// P' are Minkowski-equivalent smooth prismatoids.
IdpReport idp_via_slices(const Polytope& p, const Polytope& p2);

}  // namespace latcube
