#pragma once

#include "latcube/cubeface.hpp"
#include "latcube/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcube {

/// conv of all pairwise vertex sums.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Lattice point a of P + Q with no decomposition; region_point is a rational
/// point of R_a = P cap (a - Q), showing the region is nonempty.
struct IdpCounterexample {
  LatticeVector point;
  std::optional<RationalPoint> region_point;
};

struct Decomposition {
  LatticeVector point;
  LatticeVector first;
  LatticeVector second;
};

struct IdpReport {
  std::string method;  // "bruteforce", "regions", "dilations", "slices"
  bool verdict = true;
  long long regions_checked = 0;
  std::vector<int> dilations_checked;
  std::vector<IdpCounterexample> counterexamples;  // lexicographic, at most kMaxCounterexamples
  std::vector<Decomposition> decompositions;       // spot checks
  std::vector<std::string> notes;
  long long slice_pairs_checked = 0;
  /// Slice-based verdict compared with the direct region checker.
  std::optional<bool> agrees_with_direct;

  static constexpr std::size_t kMaxCounterexamples = 10;
  static constexpr std::size_t kMaxDecompositions = 3;
};

/// R_a = P cap (a - Q) as integer constraints on x.
IntegerConstraints decomposition_region(const Polytope& p, const Polytope& q, const LatticeVector& a);

/// A rational point of R_a (a vertex of the region), or nullopt if empty.
std::optional<RationalPoint> region_point(const Polytope& p, const Polytope& q, const LatticeVector& a);

/// Definitional check: each lattice point x of P + Q is tested against every
/// lattice point p of P for x - p in Q.
IdpReport is_idp_pair_bruteforce(const Polytope& p, const Polytope& q);

/// Region check: for each lattice point a of P + Q, R_a must contain a lattice point.
IdpReport is_idp_pair_regions(const Polytope& p, const Polytope& q);

/// (P, kP) for k = 1 .. max(1, d - 2) + extra_k via the region checker.
/// Larger k are IDP for every lattice polytope and are not checked.
IdpReport is_idp(const Polytope& p, int extra_k = 0);

/// Region check of a pair of Minkowski-equivalent smooth cubes. Throws
/// std::invalid_argument("not Minkowski-equivalent smooth cubes") otherwise.
IdpReport idp_cube_pair(const CubeStructure& c, const CubeStructure& c2);

}  // namespace latcube
