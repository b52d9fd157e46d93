#pragma once

#include <vector>

#include "relmix/vector.hpp"

namespace relmix {

// A supporting inequality normal . x >= offset whose contact set is a facet
// of the hull (a face of dimension affine_dim - 1). The normal is a primitive
// integer vector; vertices are indices into HullResult::vertices.
struct HullFacet {
  IntVector normal;
  Rat offset;
  std::vector<int> vertices;
};

struct HullResult {
  std::vector<IntVector> vertices;  // extreme points, lexicographically sorted
  std::vector<HullFacet> facets;    // sorted by (normal, offset)
  int affine_dim = 0;
};

// Exact convex hull of integer points in any (small) dimension. Handles
// lower-dimensional hulls: affine_dim reports the dimension of the affine
// span and facets are the (affine_dim - 1)-faces, with ambient supporting
// normals. A single point yields affine_dim 0 and no facets.
HullResult convex_hull(const std::vector<IntVector>& points);

}  // namespace relmix
