#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "relmix/error.hpp"
#include "relmix/numeric.hpp"

namespace relmix {

/// A point of the integer lattice or an integer covector. The dimension is
/// the length of the coordinate list.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords);

  static IntVector zero(int dim);
  static IntVector unit(int dim, int axis);  // e_axis, 0-based

  int dim() const { return static_cast<int>(coords_.size()); }
  const Int& operator[](int i) const { return coords_[i]; }
  Int& operator[](int i) { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const;
  bool all_nonnegative() const;

  // Sum of coordinates.
  Int coord_sum() const;

  Int dot(const IntVector& other) const;

  IntVector operator+(const IntVector& other) const;
  IntVector operator-(const IntVector& other) const;
  IntVector operator*(const Int& scalar) const;

  bool operator==(const IntVector& other) const {
    return coords_ == other.coords_;
  }
  bool operator!=(const IntVector& other) const { return !(*this == other); }
  // Lexicographic order; used everywhere canonical ordering is needed.
  bool operator<(const IntVector& other) const;

  // p <= q coordinatewise.
  bool dominated_by(const IntVector& other) const;

  std::string str() const;  // "(a, b, c)"

 private:
  std::vector<Int> coords_;
};

// gcd of the entries (nonnegative; 0 only for the zero vector).
Int content(const IntVector& v);

// v divided by the gcd of its entries; same direction, entry gcd 1.
IntVector primitive(const IntVector& v);

/// A primitive integer linear functional with strictly positive coordinates.
/// Non-primitive input is normalized silently; non-positive entries are
/// rejected.
class Covector {
 public:
  explicit Covector(IntVector coords);
  Covector(std::initializer_list<long> coords) : Covector(IntVector(coords)) {}

  int dim() const { return coords_.dim(); }
  const IntVector& coords() const { return coords_; }
  Int apply(const IntVector& x) const { return coords_.dot(x); }

  bool operator==(const Covector& other) const {
    return coords_ == other.coords_;
  }
  bool operator<(const Covector& other) const { return coords_ < other.coords_; }

 private:
  IntVector coords_;
};

}  // namespace relmix
