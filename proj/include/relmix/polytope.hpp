#pragma once

#include <optional>
#include <vector>

#include "relmix/hull.hpp"
#include "relmix/vector.hpp"

namespace relmix {

/// A bounded lattice polytope, stored as its exact extreme-point set in
/// lexicographic order. May be lower-dimensional in its ambient space.
class Polytope {
 public:
  // Canonicalizes: the stored vertex list is the extreme-point set of the
  // convex hull of the input.
  explicit Polytope(std::vector<IntVector> points);

  int dim() const { return dim_; }  // ambient dimension
  const std::vector<IntVector>& vertices() const { return vertices_; }

  bool operator==(const Polytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
  }
  bool operator<(const Polytope& other) const;

 private:
  std::vector<IntVector> vertices_;
  int dim_ = 0;
};

// Lattice-normalized volume (k! times the metric volume, so the standard
// simplex has volume 1). Zero iff the polytope is not full-dimensional in its
// ambient space. Integer on lattice polytopes.
Rat lattice_volume(const Polytope& k);

// Volume of a polytope lying in a level set of gamma, measured in the lattice
// of ker(gamma) via coordinate transport through kernel_lattice_basis and
// normalized by (n-1)!.
Rat lattice_volume(const Polytope& k, const Covector& gamma);

Polytope minkowski_sum_polytopes(const Polytope& k, const Polytope& l);

// Mixed volume of n polytopes in dimension n: the symmetric multilinear
// function whose diagonal is lattice_volume. Computed by inclusion-exclusion
// over Minkowski sums of subsets (the empty sum contributes 0), with the
// signed lattice-volume total divided exactly by n!.
Rat mixed_volume(const std::vector<Polytope>& args);

// Mixed volume of n-1 polytopes each parallel to ker(gamma), computed in the
// kernel lattice. Invariant under shifts of the arguments.
Rat mixed_volume(const std::vector<Polytope>& args, const Covector& gamma);

// Membership of a point in a bounded polytope, decided exactly.
bool polytope_contains(const Polytope& k, const IntVector& p);

}  // namespace relmix
