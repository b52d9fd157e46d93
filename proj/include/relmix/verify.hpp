#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relmix/tuple.hpp"

namespace relmix {

// Deterministic generator for randomized suites (splitmix64); identical
// sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish value in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Integer in [lo, hi].
  long range(long lo, long hi);

 private:
  std::uint64_t state_;
};

// Random valid polyhedron: one generator on every axis with leg in
// [1, bound], plus up to two extra points with coordinates in [0, bound].
OrthantPolyhedron random_orthant_polyhedron(Rng& rng, int n, int bound);
PolyTuple random_tuple(Rng& rng, int n, int bound);

struct SuiteReport {
  std::string suite;
  long cases = 0;
  long failures = 0;
  // One serialized offending tuple per failure.
  std::vector<std::string> violations;

  bool ok() const { return failures == 0; }
  std::string str() const;  // "suite: ...\ncases: ...\nfailures: ...\n..."
};

// All generator sets drawn from nonempty subsets of the lattice points with
// 1 <= coordinate sum <= bound that satisfy the axis invariant; used by the
// exhaustive suites.
std::vector<OrthantPolyhedron> exhaustive_family(int n, int bound,
                                                 std::uint64_t cap = 1000000);

// volume-one equivalence over every tuple of the exhaustive family.
SuiteReport run_suite_v1(int n, int bound);
// interlacing identity (mv vs hull complement) over the same family.
SuiteReport run_suite_int(int n, int bound);
// axis-extension invariance on random tuples, every axis.
SuiteReport run_suite_lemma3(int n, int bound, int count = 200,
                             std::uint64_t seed = 20240901);
// complement volume equality across clipping constants M, M+1, M+5.
SuiteReport run_suite_stability(int n, int bound, int count = 200,
                                std::uint64_t seed = 20240902);

}  // namespace relmix
