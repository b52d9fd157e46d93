#pragma once

#include <optional>

#include "relmix/tuple.hpp"

namespace relmix {

// conv(B_1 u ... u B_n) as an OrthantPolyhedron.
OrthantPolyhedron hull_union(const PolyTuple& t);

struct InterlaceResult {
  bool interlaced = false;
  // First violating face when not interlaced: a k-dimensional bounded face of
  // the hull of the union meeting at most k members.
  std::optional<BoundedFace> witness;

  explicit operator bool() const { return interlaced; }
};

// The tuple is interlaced when every k-dimensional bounded face of the hull
// of the union intersects at least k+1 members. Intersection is set-theoretic
// over the rationals, decided by exact feasibility.
InterlaceResult is_interlaced(const PolyTuple& t);

struct InterlacingVerdict {
  Int mv;
  Int hull_complement;
  bool interlaced;
};

// Computes the relative mixed volume (both algorithms), the complement volume
// of the hull of the union, and the interlacing flag, and checks the
// identity: interlaced iff the two volumes are equal, with mv strictly larger
// otherwise. Throws ConsistencyViolation if the identity fails.
InterlacingVerdict interlacing_verdict(const PolyTuple& t);

}  // namespace relmix
