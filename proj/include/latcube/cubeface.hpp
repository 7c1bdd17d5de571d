#pragma once

#include "latcube/face_lattice.hpp"
#include "latcube/polytope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latcube {

/// Cube face F_I^J: axes in I (lower) sit on the 0-side, axes in J (upper) on
/// the 1-side. Axes are 1-based in the public API and stored as bits 0..d-1.
struct FaceLabel {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;

  /// Throws std::invalid_argument if an axis is in both sets or out of range.
  static FaceLabel make(const std::vector<int>& lower_axes, const std::vector<int>& upper_axes);
  static FaceLabel facet(int axis, bool upper_side);

  bool fixes(int axis) const { return ((lower | upper) >> (axis - 1)) & 1u; }
  int codim() const;
  int dim(int d) const { return d - codim(); }
  bool valid() const { return (lower & upper) == 0; }

  friend bool operator==(const FaceLabel&, const FaceLabel&) = default;
  friend auto operator<=>(const FaceLabel&, const FaceLabel&) = default;
};

/// "1 2bar 3"; the whole cube is "".
std::string to_string(const FaceLabel& label);
/// Inverse of to_string; throws std::invalid_argument on bad tokens.
FaceLabel parse_face_label(const std::string& text);

/// F_I^J with `axis` moved between I and J. Throws if the axis is not fixed.
FaceLabel opposite(const FaceLabel& label, int axis);

/// I1 subset I2 and J1 subset J2, i.e. F_{I1}^{J1} contains F_{I2}^{J2}.
bool label_contains(const FaceLabel& big, const FaceLabel& small);
/// Label of the intersection, nullopt when the union is not disjoint.
std::optional<FaceLabel> label_meet(const FaceLabel& a, const FaceLabel& b);

class CubeStructure {
 public:
  const Polytope& polytope() const { return polytope_; }
  const FaceLattice& lattice() const { return lattice_; }
  int dim() const { return polytope_.dim(); }

  /// Facet ids of F_axis and F_axis-bar.
  int lower_facet(int axis) const { return lower_facet_[static_cast<std::size_t>(axis - 1)]; }
  int upper_facet(int axis) const { return upper_facet_[static_cast<std::size_t>(axis - 1)]; }
  /// Bit i set iff vertex v lies on F_{i+1}-bar.
  std::uint32_t vertex_bits(int v) const { return vertex_bits_[static_cast<std::size_t>(v)]; }
  /// Vertex with the given bits.
  int vertex_with_bits(std::uint32_t bits) const;
  int base_vertex() const { return vertex_with_bits(0); }

  /// Face-lattice id of F_I^J; throws on an invalid label.
  int face_id(const FaceLabel& label) const;
  /// Label of a nonempty face.
  FaceLabel label_of(int face_id) const;
  std::vector<int> face_vertices(const FaceLabel& label) const;
  /// All 3^d labels, ordered by codimension then (lower, upper).
  std::vector<FaceLabel> labels() const;

 private:
  friend std::optional<CubeStructure> recognize_cube(const Polytope&, int);
  CubeStructure(Polytope p, FaceLattice l) : polytope_(std::move(p)), lattice_(std::move(l)) {}

  Polytope polytope_;
  FaceLattice lattice_;
  std::vector<int> lower_facet_, upper_facet_;
  std::vector<std::uint32_t> vertex_bits_;
  std::map<FaceLabel, int> face_ids_;
  std::vector<std::optional<FaceLabel>> labels_;
};

/// Combinatorial-cube recognition anchored at the lexicographically smallest
/// vertex; its facets, in facet order, become the lower facets of axes 1..d.
/// nullopt when P is not a full-dimensional combinatorial cube of dimension
/// at most max_dim.
std::optional<CubeStructure> recognize_cube(const Polytope& p, int max_dim = 4);

/// The face F_I^J as a (possibly lower-dimensional) polytope.
Polytope face_of(const CubeStructure& c, const FaceLabel& label);

/// Least axis x with F_x parallel to F_x-bar.
std::optional<int> parallel_facet_pair(const CubeStructure& c);

struct PropositionCheck {
  std::string statement;
  bool premise = false;
  bool conclusion = false;
  bool holds() const { return !premise || conclusion; }
};

struct ParallelPropositions {
  /// For distinct x, y, z: F_xz || F_xz-bar and F_yz || F_yz-bar imply F_z || F_z-bar.
  std::vector<PropositionCheck> degenerate_case;
  /// For x != y: three of F_xy, F_xy-bar, F_x-bar y, F_x-bar y-bar parallel implies the fourth.
  std::vector<PropositionCheck> three_imply_fourth;
  bool all_hold() const;
};

/// Requires dim >= 3; throws std::invalid_argument otherwise.
ParallelPropositions verify_parallel_propositions(const CubeStructure& c);

}  // namespace latcube
