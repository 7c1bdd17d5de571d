#pragma once

#include "latcube/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace latcube {

/// Integer points x with A x <= b and lower <= x <= upper (componentwise).
struct IntegerConstraints {
  IntegerMatrix a;
  LatticeVector b;
  LatticeVector lower;
  LatticeVector upper;

  int dim() const { return static_cast<int>(a.cols()); }
  bool satisfied_by(const LatticeVector& x) const;
};

/// Return false from the visitor to stop the scan.
using LatticeVisitor = std::function<bool(const LatticeVector&)>;

/// Box scan with interval propagation: coordinates are fixed in order
/// x_1, x_2, ...; each level narrows its range by bounding the remaining
/// coordinates with the box, and the last coordinate is solved exactly.
/// Points are visited in lexicographic order.
///
/// The constraint matrix is fixed at construction; right-hand sides and boxes
/// vary per query, which is what the decomposition-region checks need.
/// Queries whose magnitudes fit run on int64 arithmetic, the rest on Integer.
class LatticeScanner {
 public:
  explicit LatticeScanner(IntegerMatrix a);

  int dim() const { return static_cast<int>(a_.cols()); }
  const IntegerMatrix& matrix() const { return a_; }

  /// Returns false iff the visitor stopped the scan early.
  bool scan(const LatticeVector& b, const LatticeVector& lower, const LatticeVector& upper,
            const LatticeVisitor& visit) const;
  std::optional<LatticeVector> find(const LatticeVector& b, const LatticeVector& lower,
                                    const LatticeVector& upper) const;

 private:
  IntegerMatrix a_;
  Matrix<long long> a_small_;
  bool small_ = false;
};

bool scan_lattice_points(const IntegerConstraints& c, const LatticeVisitor& visit);
std::optional<LatticeVector> find_lattice_point(const IntegerConstraints& c);
std::vector<LatticeVector> all_lattice_points(const IntegerConstraints& c);

}  // namespace latcube
