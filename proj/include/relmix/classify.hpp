#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "relmix/tuple.hpp"

namespace relmix {

// entries[i][j] is true when e_{i+1} is contained in member j+1.
struct IncidenceMatrix {
  int n = 0;
  std::vector<std::vector<bool>> entries;
};

IncidenceMatrix incidence_matrix(const PolyTuple& t);

// An all-zero block of the incidence matrix, as 0-based row and column index
// sets; certifies that no perfect matching exists (rows + cols > n).
struct ZeroBlock {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Either a permutation sigma (0-based, e_{sigma[j]} in B_j for every j) or
// the blocking zero block.
struct MatchingCertificate {
  std::optional<std::vector<int>> permutation;
  std::optional<ZeroBlock> obstruction;
};

// Perfect matching in the incidence matrix by augmenting paths; on failure
// the maximal zero block derived from a minimum vertex cover.
MatchingCertificate volume_one_certificate(const PolyTuple& t);

// Checks that the relative mixed volume equals 1 exactly when a perfect
// matching e_{sigma(j)} in B_j exists, and returns the common truth value.
// Throws ConsistencyViolation if the equivalence fails.
bool volume_one_equivalence(const PolyTuple& t);

struct MinimalityResult {
  bool minimal = false;
  // When not minimal: (member index, point) whose adjunction keeps the
  // volume at V.
  std::optional<std::pair<int, IntVector>> witness;

  explicit operator bool() const { return minimal; }
};

// A tuple of volume V is minimal when adjoining any lattice point of C \ B_i
// to any member strictly decreases the volume. Tested in two steps: first the
// axis points V*e_j (whose adjunction never changes the volume), then the
// finitely many remaining lattice points, which all have coordinate sum at
// most V-1 once every V*e_j is inside. Throws VolumeMismatch when
// rmv(t) != volume.
MinimalityResult is_minimal(const PolyTuple& t, const Int& volume);

/// Canonical representative of a tuple under simultaneous coordinate
/// permutations and reorderings of the tuple: the lexicographically minimal
/// serialization over the n! * n! actions.
struct TupleClass {
  PolyTuple representative;
  std::vector<int> coord_perm;  // applied coordinate permutation
  std::vector<int> order_perm;  // applied member reordering

  bool operator==(const TupleClass& other) const {
    return representative == other.representative;
  }
  bool operator<(const TupleClass& other) const {
    return representative < other.representative;
  }
};

TupleClass canonical_form(const PolyTuple& t);

struct EnumerationOptions {
  std::uint64_t cap = 1000000;  // raw candidate count limit
  int jobs = 1;
};

// All minimal tuples of relative mixed volume V in dimension n, up to
// coordinate and order permutation. Iterates every tuple whose members are
// generated by {V e_1, ..., V e_n} plus a subset of the lattice points with
// positive coordinate sum < V, keeps those of volume V (both algorithms) that
// are minimal, and deduplicates by canonical form. Deterministic order.
// Throws SearchTooLarge when the raw candidate count exceeds the cap.
std::vector<TupleClass> enumerate_minimal(int n, int volume,
                                          const EnumerationOptions& options = {});

// Verifies that extending member 1 by volume * e_axis (axis 0-based) leaves
// the relative mixed volume unchanged. Throws ConsistencyViolation on
// failure.
bool axis_extension_check(const PolyTuple& t, int axis);

}  // namespace relmix
