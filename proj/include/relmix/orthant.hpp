#pragma once

#include <vector>

#include "relmix/hull.hpp"
#include "relmix/polytope.hpp"
#include "relmix/vector.hpp"

namespace relmix {

/// An unbounded lattice polyhedron B = conv(generators) + C, where C is the
/// positive orthant, with B contained in C and C \ B bounded.
///
/// Invariants, enforced at construction:
///   - all generator coordinates are >= 0;
///   - every coordinate axis carries a generator of the form a*e_i (exactly
///     the condition that C \ B is bounded);
///   - the stored generators are the vertex set of B (no generator lies in
///     the hull-plus-orthant of the others), sorted lexicographically.
class OrthantPolyhedron {
 public:
  OrthantPolyhedron(int dim, std::vector<IntVector> generators);

  int dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }

  // Largest coordinate sum over the generators.
  Int max_generator_sum() const;

  bool operator==(const OrthantPolyhedron& other) const {
    return dim_ == other.dim_ && generators_ == other.generators_;
  }
  bool operator<(const OrthantPolyhedron& other) const;

 private:
  int dim_ = 0;
  std::vector<IntVector> generators_;
};

// A bounded face of an OrthantPolyhedron, 0 <= dimension <= n-1.
struct BoundedFace {
  Polytope face;
  int dimension;
};

// The polyhedron cut off the positive orthant by the hyperplane through the
// points a_i * e_i; generators {a_i e_i}. All legs must be >= 1.
OrthantPolyhedron c_simplex(const std::vector<Int>& legs);

OrthantPolyhedron minkowski_sum(const OrthantPolyhedron& b1,
                                const OrthantPolyhedron& b2);

// inf of gamma over B, attained on the generators since gamma > 0 on C.
Int support_value(const OrthantPolyhedron& b, const Covector& gamma);

// The face of B where gamma attains its minimum; bounded because gamma is
// strictly positive.
Polytope support_face(const OrthantPolyhedron& b, const Covector& gamma);

// p in B, i.e. some convex combination q of the generators has q <= p
// coordinatewise. Decided by exact feasibility.
bool contains(const OrthantPolyhedron& b, const IntVector& p);

// Lattice volume of C \ B: M^n minus the volume of conv(generators u {M e_i})
// for M = max generator coordinate sum. Independent of the choice of any
// larger clipping constant.
Int complement_volume(const OrthantPolyhedron& b);

// Same, with an explicit clipping constant M >= max generator sum.
Int complement_volume_clipped(const OrthantPolyhedron& b, const Int& clip);

// Primitive inner normals, with all coordinates strictly positive, of the
// (n-1)-dimensional bounded faces of B. Sorted lexicographically.
std::vector<Covector> positive_facet_normals(const OrthantPolyhedron& b);

// Every bounded face of B (the faces exposed by strictly positive covectors),
// from vertices up to (n-1)-faces, each reported once; sorted by (dimension,
// vertex list).
std::vector<BoundedFace> bounded_faces(const OrthantPolyhedron& b);

// conv(B u {delta}) + C; equals B iff contains(B, delta).
OrthantPolyhedron extend(const OrthantPolyhedron& b, const IntVector& delta);

}  // namespace relmix
