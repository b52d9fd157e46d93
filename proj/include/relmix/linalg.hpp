#pragma once

#include <vector>

#include "relmix/vector.hpp"

namespace relmix {

// Determinant of a square integer matrix (given as rows), by fraction-free
// elimination.
Int determinant(const std::vector<IntVector>& rows);

// Rank over Q of an integer matrix given as rows.
int rank(const std::vector<IntVector>& rows);

// Lattice-normalized volume of the simplex spanned by n+1 points in
// dimension n: |det| of the edge matrix. 0 iff the points are affinely
// dependent.
Rat simplex_volume(const std::vector<IntVector>& vertices);

// Basis of the saturated rank-(n-1) lattice {x in Z^n : gamma.x = 0} for a
// primitive nonzero gamma. The basis generates every integer point of the
// kernel (all maximal minors of the basis matrix have gcd 1).
std::vector<IntVector> kernel_lattice_basis(const IntVector& gamma);

/// Exact coordinate transport into the kernel lattice of a primitive
/// covector: coords() writes a kernel point in the kernel_lattice_basis
/// coordinates, an integer vector.
class KernelMap {
 public:
  explicit KernelMap(const IntVector& gamma);

  const std::vector<IntVector>& basis() const { return basis_; }

  // Coordinates of p in the basis; requires gamma.p = 0.
  IntVector coords(const IntVector& p) const;

 private:
  IntVector gamma_;
  std::vector<IntVector> basis_;       // n-1 vectors of dim n
  std::vector<IntVector> transport_;   // (n-1) x n integer matrix
};

}  // namespace relmix
