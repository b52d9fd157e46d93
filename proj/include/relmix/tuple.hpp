#pragma once

#include <string>
#include <vector>

#include "relmix/orthant.hpp"

namespace relmix {

/// An ordered tuple of n orthant polyhedra in dimension n; the object whose
/// relative mixed volume the library computes.
class PolyTuple {
 public:
  explicit PolyTuple(std::vector<OrthantPolyhedron> members);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  const OrthantPolyhedron& operator[](int i) const { return members_[i]; }
  const std::vector<OrthantPolyhedron>& members() const { return members_; }

  // Copy with member i replaced.
  PolyTuple with_member(int i, OrthantPolyhedron b) const;

  bool operator==(const PolyTuple& other) const {
    return members_ == other.members_;
  }
  bool operator<(const PolyTuple& other) const {
    return members_ < other.members_;
  }

  std::string str() const;

 private:
  int dim_ = 0;
  std::vector<OrthantPolyhedron> members_;
};

enum class RmvMode { InclusionExclusion, Support, Both };

// Relative mixed volume by signed inclusion-exclusion over complement volumes
// of Minkowski sub-sums, divided exactly by n!.
Int rmv_inclusion_exclusion(const PolyTuple& t);

// Relative mixed volume as the sum over primitive positive covectors gamma of
// support_value(B_1, gamma) times the kernel-lattice mixed volume of the
// support faces of B_2, ..., B_n. Only the positive facet normals of
// B_2 + ... + B_n can contribute. For n = 1 the empty mixed volume is 1 and
// the unique covector is (1).
Int rmv_support_formula(const PolyTuple& t);

// Dispatcher; RmvMode::Both runs both algorithms and throws OracleMismatch on
// disagreement.
Int rmv(const PolyTuple& t, RmvMode mode);

}  // namespace relmix
