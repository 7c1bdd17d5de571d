#include "latcube/types.hpp"

#include <stdexcept>

namespace latcube {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q),
                   boost::multiprecision::denominator(q));
}

Integer ceil(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q),
                  boost::multiprecision::denominator(q));
}

bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

bool is_integral(const RationalPoint& p) {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (!is_integral(p(i))) return false;
  return true;
}

LatticeVector to_lattice(const RationalPoint& p) {
  LatticeVector v(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!is_integral(p(i)))
      throw std::invalid_argument("non-integral coordinate in " + to_string(p));
    v(i) = boost::multiprecision::numerator(p(i));
  }
  return v;
}

RationalPoint to_rational(const LatticeVector& v) {
  return v.cast<Rational>();
}

LatticeVector clear_denominators(const RationalPoint& p) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(p(i))));
  LatticeVector v(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i)
    v(i) = boost::multiprecision::numerator(p(i)) *
           (l / boost::multiprecision::denominator(p(i)));
  return v;
}

LatticeVector lattice_vector(std::initializer_list<long long> coords) {
  LatticeVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long long c : coords) v(i++) = c;
  return v;
}

RationalPoint rational_point(std::initializer_list<long long> coords) {
  return to_rational(lattice_vector(coords));
}

LatticeVector unit_vector(int dim, int axis) {
  LatticeVector e = LatticeVector::Zero(dim);
  e(axis) = 1;
  return e;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

namespace {
template <typename V>
std::string join_coords(const V& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v(i));
  }
  return out + ")";
}
}  // namespace

std::string to_string(const LatticeVector& v) { return join_coords(v); }
std::string to_string(const RationalPoint& p) { return join_coords(p); }

Rational dot(const LatticeVector& normal, const RationalPoint& p) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) s += Rational(normal(i)) * p(i);
  return s;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

}  // namespace latcube
