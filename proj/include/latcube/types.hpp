#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace latcube {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer coordinate vector in Z^d.
using LatticeVector = Vector<Integer>;
/// Exact rational point in Q^d. mpq keeps every coordinate in lowest terms
/// with a positive denominator.
using RationalPoint = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return lex_less(a, b);
  }
};

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

bool is_integral(const Rational& q);
bool is_integral(const RationalPoint& p);

/// Throws std::invalid_argument when a coordinate is not an integer.
LatticeVector to_lattice(const RationalPoint& p);
RationalPoint to_rational(const LatticeVector& v);

/// Smallest positive multiple of `p` with integer coordinates.
LatticeVector clear_denominators(const RationalPoint& p);

LatticeVector lattice_vector(std::initializer_list<long long> coords);
RationalPoint rational_point(std::initializer_list<long long> coords);
LatticeVector unit_vector(int dim, int axis);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q);
std::string to_string(const LatticeVector& v);
std::string to_string(const RationalPoint& p);

/// Inner product of an integer normal with a rational point.
Rational dot(const LatticeVector& normal, const RationalPoint& p);
Integer dot(const LatticeVector& a, const LatticeVector& b);

}  // namespace latcube
