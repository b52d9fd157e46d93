#include <doctest.h>

#include "relmix/interlace.hpp"
#include "relmix/verify.hpp"
#include "test_helpers.hpp"

using namespace relmix;
using namespace relmix::testing;

namespace {

PolyTuple staircase_pair() {
  return PolyTuple({orthant(2, {{2, 0}, {0, 2}}),
                    orthant(2, {{3, 0}, {1, 1}, {0, 3}})});
}

}  // namespace

TEST_CASE("hull_union worked examples") {
  SUBCASE("the staircase pair collapses to the coarser member") {
    CHECK(hull_union(staircase_pair()) == orthant(2, {{2, 0}, {0, 2}}));
  }
  SUBCASE("containment collapses to the larger polyhedron") {
    CHECK(hull_union(PolyTuple({csimplex({1, 1}), csimplex({2, 2})})) ==
          csimplex({1, 1}));
  }
  SUBCASE("identical members") {
    OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
    CHECK(hull_union(PolyTuple({b, b})) == b);
  }
}

TEST_CASE("is_interlaced worked examples") {
  CHECK(is_interlaced(staircase_pair()).interlaced);

  SUBCASE("nested simplices fail on the diagonal edge") {
    InterlaceResult r = is_interlaced(PolyTuple({csimplex({1, 1}), csimplex({2, 2})}));
    REQUIRE_FALSE(r.interlaced);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dimension == 1);
    CHECK(r.witness->face == polytope({{1, 0}, {0, 1}}));
  }

  SUBCASE("repeated members are always interlaced") {
    Rng rng(919);
    for (int trial = 0; trial < 15; ++trial) {
      int n = 2 + static_cast<int>(rng.below(2));
      OrthantPolyhedron b = random_orthant_polyhedron(rng, n, 4);
      PolyTuple t(std::vector<OrthantPolyhedron>(static_cast<size_t>(n), b));
      CHECK(is_interlaced(t).interlaced);
    }
  }
}

TEST_CASE("is_interlaced is invariant under tuple and coordinate permutations") {
  Rng rng(1020);
  for (int trial = 0; trial < 20; ++trial) {
    PolyTuple t = random_tuple(rng, 2, 4);
    bool base = is_interlaced(t).interlaced;
    CHECK(is_interlaced(PolyTuple({t[1], t[0]})).interlaced == base);
    // swap both coordinates of every member
    std::vector<OrthantPolyhedron> swapped;
    for (const OrthantPolyhedron& b : t.members()) {
      std::vector<IntVector> gens;
      for (const IntVector& g : b.generators()) {
        gens.emplace_back(std::vector<Int>{g[1], g[0]});
      }
      swapped.emplace_back(2, std::move(gens));
    }
    CHECK(is_interlaced(PolyTuple(std::move(swapped))).interlaced == base);
  }
}

TEST_CASE("interlacing verdict on worked examples") {
  SUBCASE("equal volumes when interlaced") {
    InterlacingVerdict v = interlacing_verdict(staircase_pair());
    CHECK(v.mv == 4);
    CHECK(v.hull_complement == 4);
    CHECK(v.interlaced);
  }
  SUBCASE("strictly larger when not interlaced") {
    InterlacingVerdict v =
        interlacing_verdict(PolyTuple({csimplex({1, 1}), csimplex({2, 2})}));
    CHECK(v.mv == 2);
    CHECK(v.hull_complement == 1);
    CHECK_FALSE(v.interlaced);
  }
  SUBCASE("volume-one pair") {
    InterlacingVerdict v =
        interlacing_verdict(PolyTuple({csimplex({1, 1}), csimplex({1, 1})}));
    CHECK(v.mv == 1);
    CHECK(v.hull_complement == 1);
    CHECK(v.interlaced);
  }
}

TEST_CASE("verdict identity holds across the exhaustive desk-scale family") {
  std::vector<OrthantPolyhedron> family = exhaustive_family(2, 2);
  CHECK(family.size() == 18);
  for (const OrthantPolyhedron& a : family) {
    for (const OrthantPolyhedron& b : family) {
      PolyTuple t({a, b});
      InterlacingVerdict v = interlacing_verdict(t);  // throws on violation
      CHECK(v.mv >= v.hull_complement);
      CHECK((v.mv == v.hull_complement) == v.interlaced);
    }
  }
}

TEST_CASE("enlarging a member keeps interlacing when the hull is unchanged") {
  Rng rng(1121);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    PolyTuple t = random_tuple(rng, 2, 4);
    if (!is_interlaced(t).interlaced) continue;
    int member = static_cast<int>(rng.below(2));
    IntVector delta = vec({rng.range(0, 4), rng.range(0, 4)});
    PolyTuple enlarged = t.with_member(member, extend(t[member], delta));
    if (!(hull_union(enlarged) == hull_union(t))) continue;
    ++checked;
    CHECK(is_interlaced(enlarged).interlaced);
  }
  CHECK(checked > 0);
}
