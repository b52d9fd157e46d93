#include <doctest.h>

#include <set>

#include "relmix/orthant.hpp"
#include "relmix/verify.hpp"
#include "test_helpers.hpp"

using namespace relmix;
using namespace relmix::testing;

TEST_CASE("c_simplex generators and membership") {
  OrthantPolyhedron c11 = csimplex({1, 1});
  CHECK(c11.generators() == std::vector<IntVector>{vec({0, 1}), vec({1, 0})});
  OrthantPolyhedron c122 = csimplex({1, 2, 2});
  CHECK(c122.generators() ==
        std::vector<IntVector>{vec({0, 0, 2}), vec({0, 2, 0}), vec({1, 0, 0})});
  CHECK_THROWS_AS(c_simplex({Int(1), Int(0)}), NonPositiveLeg);

  // {x in C : sum x_i / a_i >= 1} on a small lattice box
  OrthantPolyhedron c23 = csimplex({2, 3});
  for (long x = 0; x <= 4; ++x) {
    for (long y = 0; y <= 4; ++y) {
      bool expected = 3 * x + 2 * y >= 6;
      CHECK(contains(c23, vec({x, y})) == expected);
    }
  }
}

TEST_CASE("construction rejects invalid generator sets") {
  CHECK_THROWS_AS(orthant(2, {{1, 1}}), UnboundedComplement);
  CHECK_THROWS_AS(orthant(2, {{1, 0}}), UnboundedComplement);
  CHECK_THROWS_AS(orthant(2, {{1, 0}, {0, -1}}), NegativeCoordinate);
  CHECK_THROWS_AS(orthant(2, {{1, 0, 0}, {0, 1, 0}}), DimensionMismatch);
}

TEST_CASE("canonicalization keeps exactly the vertex generators") {
  SUBCASE("dominated and convex-combination points are absorbed") {
    OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}, {2, 2}, {4, 1}, {3, 0}});
    CHECK(b.generators() ==
          std::vector<IntVector>{vec({0, 3}), vec({1, 1}), vec({3, 0})});
  }
  SUBCASE("random dominated points never change the canonical form") {
    Rng rng(123);
    for (int trial = 0; trial < 60; ++trial) {
      OrthantPolyhedron b = random_orthant_polyhedron(rng, 3, 4);
      std::vector<IntVector> gens = b.generators();
      size_t extras = 1 + rng.below(3);
      for (size_t e = 0; e < extras; ++e) {
        IntVector g = gens[rng.below(b.generators().size())];
        IntVector bump = vec({rng.range(0, 2), rng.range(0, 2), rng.range(0, 2)});
        gens.push_back(g + bump);
      }
      OrthantPolyhedron again(3, gens);
      CHECK(again == b);
    }
  }
}

TEST_CASE("minkowski_sum on the staircase pair") {
  OrthantPolyhedron a = orthant(2, {{2, 0}, {0, 2}});
  OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
  SUBCASE("worked sum") {
    OrthantPolyhedron sum = minkowski_sum(a, b);
    CHECK(sum.generators() == std::vector<IntVector>{vec({0, 5}), vec({1, 3}),
                                                     vec({3, 1}), vec({5, 0})});
  }
  SUBCASE("the orthant itself is neutral") {
    OrthantPolyhedron orthant_only = orthant(2, {{0, 0}});
    CHECK(minkowski_sum(b, orthant_only) == b);
  }
  SUBCASE("doubling the diagonal") {
    OrthantPolyhedron c11 = csimplex({1, 1});
    CHECK(minkowski_sum(c11, c11) == csimplex({2, 2}));
  }
}

TEST_CASE("support values and faces of the staircase pair") {
  OrthantPolyhedron a = orthant(2, {{2, 0}, {0, 2}});
  OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
  CHECK(support_value(a, Covector({2, 1})) == 2);
  CHECK(support_value(a, Covector({1, 2})) == 2);
  // oracle: min(gamma . g) over the three generators = min{3, 3, 6}
  CHECK(support_value(b, Covector({1, 2})) == 3);

  CHECK(support_face(b, Covector({2, 1})) == polytope({{0, 3}, {1, 1}}));
  CHECK(support_face(b, Covector({1, 2})) == polytope({{1, 1}, {3, 0}}));
  CHECK(support_face(csimplex({1, 1}), Covector({1, 1})) == polytope({{1, 0}, {0, 1}}));
}

TEST_CASE("support values add under minkowski sums") {
  Rng rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    OrthantPolyhedron b1 = random_orthant_polyhedron(rng, 2, 5);
    OrthantPolyhedron b2 = random_orthant_polyhedron(rng, 2, 5);
    OrthantPolyhedron sum = minkowski_sum(b1, b2);
    for (long u = 1; u <= 5; ++u) {
      for (long v = 1; v <= 5; ++v) {
        Covector gamma(vec({u, v}));
        CHECK(support_value(sum, gamma) ==
              support_value(b1, gamma) + support_value(b2, gamma));
      }
    }
  }
}

TEST_CASE("support face vertices attain the minimum strictly") {
  Rng rng(214);
  for (int trial = 0; trial < 40; ++trial) {
    OrthantPolyhedron b = random_orthant_polyhedron(rng, 3, 5);
    Covector gamma(vec({rng.range(1, 5), rng.range(1, 5), rng.range(1, 5)}));
    Int value = support_value(b, gamma);
    Polytope face = support_face(b, gamma);
    std::set<IntVector> face_set(face.vertices().begin(), face.vertices().end());
    for (const IntVector& v : face.vertices()) CHECK(gamma.apply(v) == value);
    for (const IntVector& g : b.generators()) {
      if (!face_set.count(g)) CHECK(gamma.apply(g) > value);
    }
  }
}

TEST_CASE("contains worked examples and oracle agreement") {
  OrthantPolyhedron c12 = csimplex({1, 2});
  CHECK(contains(c12, vec({1, 0})));
  CHECK_FALSE(contains(c12, vec({0, 1})));
  CHECK(contains(csimplex({2, 2}), vec({1, 1})));

  Rng rng(251);
  for (int trial = 0; trial < 50; ++trial) {
    OrthantPolyhedron b = random_orthant_polyhedron(rng, 2, 4);
    IntVector p = vec({rng.range(0, 6), rng.range(0, 6)});
    CHECK(contains(b, p) == hrep_contains(b, p));
  }
  for (int trial = 0; trial < 30; ++trial) {
    OrthantPolyhedron b = random_orthant_polyhedron(rng, 3, 3);
    IntVector p = vec({rng.range(0, 4), rng.range(0, 4), rng.range(0, 4)});
    CHECK(contains(b, p) == hrep_contains(b, p));
  }
}

TEST_CASE("complement volumes of the worked examples") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Int> legs(static_cast<size_t>(n), Int(1));
    CHECK(complement_volume(c_simplex(legs)) == 1);
  }
  CHECK(complement_volume(orthant(2, {{2, 0}, {0, 2}})) == 4);
  CHECK(complement_volume(csimplex({2, 3})) == 6);
  CHECK(complement_volume(orthant(2, {{3, 0}, {1, 1}, {0, 3}})) == 6);
  CHECK(complement_volume(orthant(2, {{0, 0}})) == 0);
}

TEST_CASE("complement volume is stable under larger clipping constants") {
  Rng rng(262);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    OrthantPolyhedron b = random_orthant_polyhedron(rng, n, 6);
    Int m = b.max_generator_sum();
    Int v = complement_volume_clipped(b, m);
    CHECK(complement_volume_clipped(b, m + 1) == v);
    CHECK(complement_volume_clipped(b, m + 5) == v);
    CHECK(complement_volume(b) == v);
  }
}

TEST_CASE("positive facet normals") {
  OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
  CHECK(positive_facet_normals(b) ==
        std::vector<Covector>{Covector({1, 2}), Covector({2, 1})});
  CHECK(positive_facet_normals(csimplex({1, 1, 1})) ==
        std::vector<Covector>{Covector({1, 1, 1})});
  CHECK(positive_facet_normals(orthant(3, {{0, 0, 0}})).empty());
}

TEST_CASE("bounded faces") {
  SUBCASE("staircase ends and edge") {
    std::vector<BoundedFace> faces = bounded_faces(orthant(2, {{2, 0}, {0, 2}}));
    REQUIRE(faces.size() == 3);
    CHECK(faces[0].dimension == 0);
    CHECK(faces[0].face == polytope({{0, 2}}));
    CHECK(faces[1].dimension == 0);
    CHECK(faces[1].face == polytope({{2, 0}}));
    CHECK(faces[2].dimension == 1);
    CHECK(faces[2].face == polytope({{2, 0}, {0, 2}}));
  }
  SUBCASE("two vertices and one edge") {
    std::vector<BoundedFace> faces = bounded_faces(csimplex({1, 1}));
    REQUIRE(faces.size() == 3);
    CHECK(faces[2].dimension == 1);
  }
  SUBCASE("three vertices and two edges") {
    std::vector<BoundedFace> faces = bounded_faces(orthant(2, {{3, 0}, {1, 1}, {0, 3}}));
    int verts = 0, edges = 0;
    for (const BoundedFace& f : faces) {
      if (f.dimension == 0) ++verts;
      if (f.dimension == 1) ++edges;
    }
    CHECK(verts == 3);
    CHECK(edges == 2);
    CHECK(faces.size() == 5);
  }
  SUBCASE("meet-closed family") {
    Rng rng(333);
    for (int trial = 0; trial < 25; ++trial) {
      OrthantPolyhedron b = random_orthant_polyhedron(rng, 3, 4);
      std::vector<BoundedFace> faces = bounded_faces(b);
      std::set<std::vector<IntVector>> reported;
      for (const BoundedFace& f : faces) reported.insert(f.face.vertices());
      for (const BoundedFace& f : faces) {
        for (const BoundedFace& g : faces) {
          std::vector<IntVector> meet;
          std::set<IntVector> gs(g.face.vertices().begin(), g.face.vertices().end());
          for (const IntVector& v : f.face.vertices()) {
            if (gs.count(v)) meet.push_back(v);
          }
          if (meet.empty()) continue;
          CHECK(reported.count(meet) == 1);
        }
      }
    }
  }
}

TEST_CASE("extend adjoins a point and canonicalizes") {
  CHECK(extend(csimplex({2, 2}), vec({1, 0})) == csimplex({1, 2}));
  OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
  CHECK(extend(b, vec({1, 1})) == b);
  CHECK(extend(csimplex({1, 1}), vec({0, 0})) == orthant(2, {{0, 0}}));
  CHECK_THROWS_AS(extend(b, vec({-1, 0})), NegativeCoordinate);

  Rng rng(414);
  for (int trial = 0; trial < 40; ++trial) {
    OrthantPolyhedron r = random_orthant_polyhedron(rng, 2, 5);
    IntVector delta = vec({rng.range(0, 6), rng.range(0, 6)});
    bool inside = contains(r, delta);
    CHECK((extend(r, delta) == r) == inside);
  }
}
