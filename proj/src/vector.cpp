#include "relmix/vector.hpp"

#include <sstream>

namespace relmix {

IntVector::IntVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

IntVector IntVector::zero(int dim) {
  return IntVector(std::vector<Int>(static_cast<size_t>(dim), Int(0)));
}

IntVector IntVector::unit(int dim, int axis) {
  IntVector v = zero(dim);
  v[axis] = 1;
  return v;
}

bool IntVector::is_zero() const {
  for (const Int& c : coords_)
    if (c != 0) return false;
  return true;
}

bool IntVector::all_nonnegative() const {
  for (const Int& c : coords_)
    if (c < 0) return false;
  return true;
}

Int IntVector::coord_sum() const {
  Int s = 0;
  for (const Int& c : coords_) s += c;
  return s;
}

Int IntVector::dot(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch();
  Int s = 0;
  for (int i = 0; i < dim(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

IntVector IntVector::operator+(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch();
  std::vector<Int> r(coords_);
  for (int i = 0; i < dim(); ++i) r[i] += other.coords_[i];
  return IntVector(std::move(r));
}

IntVector IntVector::operator-(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch();
  std::vector<Int> r(coords_);
  for (int i = 0; i < dim(); ++i) r[i] -= other.coords_[i];
  return IntVector(std::move(r));
}

IntVector IntVector::operator*(const Int& scalar) const {
  std::vector<Int> r(coords_);
  for (Int& c : r) c *= scalar;
  return IntVector(std::move(r));
}

bool IntVector::operator<(const IntVector& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  for (int i = 0; i < dim(); ++i) {
    int c = cmp(coords_[i], other.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool IntVector::dominated_by(const IntVector& other) const {
  if (dim() != other.dim()) throw DimensionMismatch();
  for (int i = 0; i < dim(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

std::string IntVector::str() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

Int content(const IntVector& v) {
  Int g = 0;
  for (int i = 0; i < v.dim(); ++i) g = gcd(g, v[i]);
  return g;
}

IntVector primitive(const IntVector& v) {
  if (v.is_zero()) throw ZeroVector("primitive: zero vector");
  Int g = content(v);
  std::vector<Int> r;
  r.reserve(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) r.push_back(exact_div(v[i], g));
  return IntVector(std::move(r));
}

Covector::Covector(IntVector coords) {
  for (int i = 0; i < coords.dim(); ++i)
    if (coords[i] <= 0) throw NonPositiveCovector();
  coords_ = primitive(coords);
}

}  // namespace relmix
