#include "relmix/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relmix/classify.hpp"
#include "relmix/interlace.hpp"
#include "relmix/io.hpp"

namespace relmix {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

long Rng::range(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

OrthantPolyhedron random_orthant_polyhedron(Rng& rng, int n, int bound) {
  std::vector<IntVector> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(IntVector::unit(n, i) * Int(rng.range(1, bound)));
  }
  int extra = static_cast<int>(rng.below(3));
  for (int e = 0; e < extra; ++e) {
    std::vector<Int> coords(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) coords[static_cast<size_t>(i)] = Int(rng.range(0, bound));
    gens.emplace_back(std::move(coords));
  }
  return OrthantPolyhedron(n, std::move(gens));
}

PolyTuple random_tuple(Rng& rng, int n, int bound) {
  std::vector<OrthantPolyhedron> members;
  members.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) members.push_back(random_orthant_polyhedron(rng, n, bound));
  return PolyTuple(std::move(members));
}

std::string SuiteReport::str() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "cases: " << cases << "\n";
  out << "failures: " << failures << "\n";
  for (const std::string& v : violations) out << "violation: " << v << "\n";
  return out.str();
}

std::vector<OrthantPolyhedron> exhaustive_family(int n, int bound,
                                                 std::uint64_t cap) {
  // Candidate generators: lattice points with 1 <= coordinate sum <= bound.
  std::vector<IntVector> pool;
  {
    std::vector<IntVector> p;
    IntVector v = IntVector::zero(n);
    for (;;) {
      if (v.coord_sum() >= 1 && v.coord_sum() <= bound) p.push_back(v);
      int k = n - 1;
      while (k >= 0) {
        v[k] += 1;
        if (v.coord_sum() <= bound) break;
        v[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
    pool = std::move(p);
    std::sort(pool.begin(), pool.end());
  }
  if (pool.size() >= 63 || (std::uint64_t(1) << pool.size()) > cap) {
    throw SearchTooLarge("exhaustive family has 2^" +
                         std::to_string(pool.size()) + " generator sets");
  }
  // One family member per qualifying subset; distinct subsets may
  // canonicalize to the same polyhedron and are checked anyway.
  std::vector<OrthantPolyhedron> family;
  const std::uint64_t subsets = std::uint64_t(1) << pool.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<IntVector> gens;
    for (size_t k = 0; k < pool.size(); ++k) {
      if ((mask >> k) & 1) gens.push_back(pool[k]);
    }
    // axis invariant
    bool valid = true;
    for (int i = 0; i < n && valid; ++i) {
      bool found = false;
      for (const IntVector& g : gens) {
        bool on_axis = true;
        for (int j = 0; j < n && on_axis; ++j) {
          if (j != i && g[j] != 0) on_axis = false;
        }
        if (on_axis) {
          found = true;
          break;
        }
      }
      valid = found;
    }
    if (!valid) continue;
    family.emplace_back(n, std::move(gens));
  }
  return family;
}

SuiteReport run_suite_v1(int n, int bound) {
  SuiteReport report;
  report.suite = "v1";
  std::vector<OrthantPolyhedron> family = exhaustive_family(n, bound);
  std::vector<size_t> pick(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<OrthantPolyhedron> members;
    members.reserve(static_cast<size_t>(n));
    for (size_t i : pick) members.push_back(family[i]);
    PolyTuple t(std::move(members));
    ++report.cases;
    try {
      volume_one_equivalence(t);
    } catch (const Error&) {
      ++report.failures;
      report.violations.push_back(serialize_tuple(t));
    }
    int k = n - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] + 1 == family.size()) {
      pick[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
  }
  return report;
}

SuiteReport run_suite_int(int n, int bound) {
  SuiteReport report;
  report.suite = "int";
  std::vector<OrthantPolyhedron> family = exhaustive_family(n, bound);
  std::vector<size_t> pick(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<OrthantPolyhedron> members;
    members.reserve(static_cast<size_t>(n));
    for (size_t i : pick) members.push_back(family[i]);
    PolyTuple t(std::move(members));
    ++report.cases;
    try {
      interlacing_verdict(t);
    } catch (const Error&) {
      ++report.failures;
      report.violations.push_back(serialize_tuple(t));
    }
    int k = n - 1;
    while (k >= 0 && pick[static_cast<size_t>(k)] + 1 == family.size()) {
      pick[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++pick[static_cast<size_t>(k)];
  }
  return report;
}

SuiteReport run_suite_lemma3(int n, int bound, int count, std::uint64_t seed) {
  SuiteReport report;
  report.suite = "lemma3";
  Rng rng(seed);
  for (int c = 0; c < count; ++c) {
    PolyTuple t = random_tuple(rng, n, bound);
    for (int axis = 0; axis < n; ++axis) {
      ++report.cases;
      try {
        axis_extension_check(t, axis);
      } catch (const Error&) {
        ++report.failures;
        report.violations.push_back(serialize_tuple(t));
      }
    }
  }
  return report;
}

SuiteReport run_suite_stability(int n, int bound, int count,
                                std::uint64_t seed) {
  SuiteReport report;
  report.suite = "stability";
  Rng rng(seed);
  for (int c = 0; c < count; ++c) {
    OrthantPolyhedron b = random_orthant_polyhedron(rng, n, bound);
    ++report.cases;
    Int m = b.max_generator_sum();
    Int v0 = complement_volume_clipped(b, m);
    Int v1 = complement_volume_clipped(b, m + 1);
    Int v5 = complement_volume_clipped(b, m + 5);
    if (v0 != v1 || v0 != v5) {
      ++report.failures;
      report.violations.push_back(serialize_polyhedron(b));
    }
  }
  return report;
}

}  // namespace relmix
