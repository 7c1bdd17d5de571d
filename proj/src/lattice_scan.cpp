#include "latcube/lattice_scan.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcube {

namespace {

constexpr long long kMatrixLimit = 1LL << 24;
constexpr long long kBoxLimit = 1LL << 24;
constexpr long long kRhsLimit = 1LL << 56;

bool fits(const Integer& x, long long limit) { return x <= limit && x >= -limit; }

long long div_floor(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long div_ceil(long long a, long long b) { return -div_floor(-a, b); }

Integer div_floor(const Integer& a, const Integer& b) { return floor_div(a, b); }
Integer div_ceil(const Integer& a, const Integer& b) { return ceil_div(a, b); }

template <typename Int>
Int to_int(const Integer& x) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return x;
  } else {
    return x.template convert_to<long long>();
  }
}

template <typename Int>
Integer to_integer(const Int& x) {
  return Integer(x);
}

template <typename Int>
Int min_of(const Int& a, const Int& b) { return b < a ? b : a; }
template <typename Int>
Int max_of(const Int& a, const Int& b) { return a < b ? b : a; }

template <typename Int>
class ScanKernel {
 public:
  ScanKernel(const Matrix<Int>& a, Vector<Int> b, Vector<Int> lower, Vector<Int> upper,
             const LatticeVisitor& visit)
      : a_(a), b_(std::move(b)), lower_(std::move(lower)), upper_(std::move(upper)),
        visit_(visit), rows_(a.rows()), n_(a.cols()) {
    minrest_.assign(static_cast<std::size_t>(n_ + 1), Vector<Int>::Zero(rows_));
    for (Eigen::Index i = n_ - 1; i >= 0; --i) {
      auto& cur = minrest_[static_cast<std::size_t>(i)];
      cur = minrest_[static_cast<std::size_t>(i + 1)];
      for (Eigen::Index r = 0; r < rows_; ++r) {
        const Int lo = a_(r, i) * lower_(i);
        const Int hi = a_(r, i) * upper_(i);
        cur(r) += min_of(lo, hi);
      }
    }
    x_ = Vector<Int>::Zero(n_);
  }

  bool run() {
    if (n_ == 0) return true;
    for (Eigen::Index i = 0; i < n_; ++i)
      if (upper_(i) < lower_(i)) return true;
    return level(0, Vector<Int>::Zero(rows_));
  }

 private:
  bool level(Eigen::Index i, const Vector<Int>& partial) {
    Int lo = lower_(i), hi = upper_(i);
    const auto& rest = minrest_[static_cast<std::size_t>(i + 1)];
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const Int rem = b_(r) - partial(r) - rest(r);
      const Int& c = a_(r, i);
      if (c > 0) {
        hi = min_of(hi, div_floor(rem, c));
      } else if (c < 0) {
        lo = max_of(lo, div_ceil(rem, c));
      } else if (rem < 0) {
        return true;
      }
      if (hi < lo) return true;
    }
    for (Int v = lo; v <= hi; ++v) {
      x_(i) = v;
      if (i + 1 == n_) {
        LatticeVector point(n_);
        for (Eigen::Index j = 0; j < n_; ++j) point(j) = to_integer(x_(j));
        if (!visit_(point)) return false;
      } else {
        Vector<Int> next = partial;
        for (Eigen::Index r = 0; r < rows_; ++r) next(r) += a_(r, i) * v;
        if (!level(i + 1, next)) return false;
      }
    }
    return true;
  }

  const Matrix<Int>& a_;
  Vector<Int> b_, lower_, upper_;
  const LatticeVisitor& visit_;
  Eigen::Index rows_, n_;
  std::vector<Vector<Int>> minrest_;
  Vector<Int> x_;
};

template <typename Int>
Vector<Int> convert(const LatticeVector& v) {
  Vector<Int> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_int<Int>(v(i));
  return out;
}

}  // namespace

bool IntegerConstraints::satisfied_by(const LatticeVector& x) const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) < lower(i) || x(i) > upper(i)) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Integer s = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += a(r, j) * x(j);
    if (s > b(r)) return false;
  }
  return true;
}

LatticeScanner::LatticeScanner(IntegerMatrix a) : a_(std::move(a)) {
  small_ = true;
  for (Eigen::Index i = 0; i < a_.rows() && small_; ++i)
    for (Eigen::Index j = 0; j < a_.cols(); ++j)
      if (!fits(a_(i, j), kMatrixLimit)) {
        small_ = false;
        break;
      }
  if (small_) {
    a_small_.resize(a_.rows(), a_.cols());
    for (Eigen::Index i = 0; i < a_.rows(); ++i)
      for (Eigen::Index j = 0; j < a_.cols(); ++j) a_small_(i, j) = a_(i, j).convert_to<long long>();
  }
}

bool LatticeScanner::scan(const LatticeVector& b, const LatticeVector& lower,
                          const LatticeVector& upper, const LatticeVisitor& visit) const {
  if (b.size() != a_.rows() || lower.size() != a_.cols() || upper.size() != a_.cols())
    throw std::invalid_argument("lattice scan: dimension mismatch");
  bool small = small_;
  for (Eigen::Index i = 0; i < b.size() && small; ++i) small = fits(b(i), kRhsLimit);
  for (Eigen::Index i = 0; i < lower.size() && small; ++i)
    small = fits(lower(i), kBoxLimit) && fits(upper(i), kBoxLimit);
  if (small) {
    ScanKernel<long long> kernel(a_small_, convert<long long>(b), convert<long long>(lower),
                                 convert<long long>(upper), visit);
    return kernel.run();
  }
  ScanKernel<Integer> kernel(a_, b, lower, upper, visit);
  return kernel.run();
}

std::optional<LatticeVector> LatticeScanner::find(const LatticeVector& b,
                                                  const LatticeVector& lower,
                                                  const LatticeVector& upper) const {
  std::optional<LatticeVector> found;
  scan(b, lower, upper, [&](const LatticeVector& x) {
    found = x;
    return false;
  });
  return found;
}

bool scan_lattice_points(const IntegerConstraints& c, const LatticeVisitor& visit) {
  return LatticeScanner(c.a).scan(c.b, c.lower, c.upper, visit);
}

std::optional<LatticeVector> find_lattice_point(const IntegerConstraints& c) {
  return LatticeScanner(c.a).find(c.b, c.lower, c.upper);
}

std::vector<LatticeVector> all_lattice_points(const IntegerConstraints& c) {
  std::vector<LatticeVector> out;
  scan_lattice_points(c, [&](const LatticeVector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace latcube
