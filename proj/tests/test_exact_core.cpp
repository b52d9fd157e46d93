#include <doctest.h>

#include <set>

#include "relmix/feasible.hpp"
#include "relmix/hull.hpp"
#include "relmix/linalg.hpp"
#include "relmix/polytope.hpp"
#include "relmix/verify.hpp"
#include "test_helpers.hpp"

using namespace relmix;
using namespace relmix::testing;

TEST_CASE("primitive divides by the content") {
  CHECK(primitive(vec({2, 4})) == vec({1, 2}));
  CHECK(primitive(vec({1, 2})) == vec({1, 2}));
  CHECK(primitive(vec({3, 0, 6})) == vec({1, 0, 2}));
  CHECK(primitive(vec({-2, 4})) == vec({-1, 2}));
  CHECK_THROWS_AS(primitive(vec({0, 0})), ZeroVector);
}

TEST_CASE("covectors normalize to primitive form and reject non-positive entries") {
  CHECK(Covector({2, 4}) == Covector({1, 2}));
  CHECK(Covector({3, 3, 3}) == Covector({1, 1, 1}));
  CHECK_THROWS_AS(Covector({0, 1}), NonPositiveCovector);
  CHECK_THROWS_AS(Covector({1, -2}), NonPositiveCovector);
}

TEST_CASE("primitive is idempotent") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Int> c(3);
    for (auto& x : c) x = Int(rng.range(-9, 9));
    IntVector v{std::vector<Int>(c)};
    if (v.is_zero()) continue;
    IntVector p = primitive(v);
    CHECK(primitive(p) == p);
  }
}

namespace {

// gcd of the maximal minors of an (n-1) x n matrix; 1 means the rows generate
// a saturated lattice.
Int maximal_minor_gcd(const std::vector<IntVector>& basis) {
  const int n = basis[0].dim();
  Int g = 0;
  for (int drop = 0; drop < n; ++drop) {
    std::vector<IntVector> sub;
    for (const IntVector& b : basis) {
      std::vector<Int> row;
      for (int j = 0; j < n; ++j) {
        if (j != drop) row.push_back(b[j]);
      }
      sub.emplace_back(std::move(row));
    }
    g = gcd(g, determinant(sub));
  }
  return g;
}

}  // namespace

TEST_CASE("kernel_lattice_basis is orthogonal and saturated") {
  SUBCASE("worked examples") {
    for (IntVector gamma : {vec({1, 1}), vec({2, 1}), vec({1, 1, 1})}) {
      std::vector<IntVector> basis = kernel_lattice_basis(gamma);
      REQUIRE(basis.size() == static_cast<size_t>(gamma.dim() - 1));
      for (const IntVector& b : basis) CHECK(gamma.dot(b) == 0);
      CHECK(maximal_minor_gcd(basis) == 1);
    }
  }
  SUBCASE("random primitive covectors") {
    Rng rng(22);
    int checked = 0;
    while (checked < 100) {
      std::vector<Int> c(3);
      for (auto& x : c) x = Int(rng.range(-9, 9));
      IntVector gamma{std::vector<Int>(c)};
      if (gamma.is_zero()) continue;
      gamma = primitive(gamma);
      std::vector<IntVector> basis = kernel_lattice_basis(gamma);
      for (const IntVector& b : basis) CHECK(gamma.dot(b) == 0);
      CHECK(maximal_minor_gcd(basis) == 1);
      ++checked;
    }
  }
  SUBCASE("rejects non-primitive input") {
    CHECK_THROWS_AS(kernel_lattice_basis(vec({2, 4})), NotPrimitive);
    CHECK_THROWS_AS(kernel_lattice_basis(vec({0, 0})), ZeroVector);
  }
}

TEST_CASE("kernel map transports integer kernel points to integer coordinates") {
  KernelMap map(vec({2, 1}));
  IntVector p = vec({1, -2});
  IntVector y = map.coords(p);
  REQUIRE(y.dim() == 1);
  // reconstruct from the basis
  IntVector back = IntVector::zero(2);
  for (size_t i = 0; i < map.basis().size(); ++i) back = back + map.basis()[i] * y[static_cast<int>(i)];
  CHECK(back == p);
  CHECK_THROWS_AS(map.coords(vec({1, 1})), NotParallel);
}

TEST_CASE("convex_hull worked examples") {
  SUBCASE("midpoint on an edge is not a vertex") {
    HullResult h = convex_hull({vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({1, 1})});
    CHECK(h.affine_dim == 2);
    REQUIRE(h.vertices.size() == 3);
    CHECK(h.vertices[0] == vec({0, 0}));
    CHECK(h.vertices[1] == vec({0, 2}));
    CHECK(h.vertices[2] == vec({2, 0}));
  }
  SUBCASE("hull of the summed staircase points") {
    std::vector<IntVector> pts;
    for (IntVector a : {vec({2, 0}), vec({0, 2})})
      for (IntVector b : {vec({3, 0}), vec({1, 1}), vec({0, 3})}) pts.push_back(a + b);
    HullResult h = convex_hull(pts);
    std::vector<IntVector> expect = {vec({0, 5}), vec({1, 3}), vec({3, 1}), vec({5, 0})};
    CHECK(h.vertices == expect);
  }
  SUBCASE("collinear points give a one-dimensional hull") {
    HullResult h = convex_hull({vec({0, 0}), vec({1, 1}), vec({2, 2})});
    CHECK(h.affine_dim == 1);
    REQUIRE(h.vertices.size() == 2);
    CHECK(h.vertices[0] == vec({0, 0}));
    CHECK(h.vertices[1] == vec({2, 2}));
  }
  SUBCASE("single point") {
    HullResult h = convex_hull({vec({3, 4}), vec({3, 4})});
    CHECK(h.affine_dim == 0);
    CHECK(h.vertices.size() == 1);
    CHECK(h.facets.empty());
  }
  SUBCASE("mixed dimensions rejected") {
    CHECK_THROWS_AS(convex_hull({vec({1, 2}), vec({1, 2, 3})}), DimensionMismatch);
  }
}

TEST_CASE("convex_hull facet inequalities are supporting and tight") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));
    size_t count = 4 + rng.below(8);
    std::vector<IntVector> pts;
    for (size_t i = 0; i < count; ++i) {
      std::vector<Int> c(static_cast<size_t>(n));
      for (auto& x : c) x = Int(rng.range(-4, 4));
      pts.emplace_back(std::move(c));
    }
    HullResult h = convex_hull(pts);
    for (const HullFacet& f : h.facets) {
      size_t tight = 0;
      for (const IntVector& p : pts) {
        Rat value(f.normal.dot(p));
        CHECK(value >= f.offset);
      }
      for (const IntVector& v : h.vertices) {
        if (Rat(f.normal.dot(v)) == f.offset) ++tight;
      }
      CHECK(tight == f.vertices.size());
    }
  }
}

TEST_CASE("hull vertices are exactly the points outside the hull of the rest") {
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntVector> pts;
    size_t count = 4 + rng.below(6);
    for (size_t i = 0; i < count; ++i) pts.push_back(vec({rng.range(0, 4), rng.range(0, 4)}));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    HullResult h = convex_hull(pts);
    std::set<IntVector> vertex_set(h.vertices.begin(), h.vertices.end());
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<IntVector> others;
      for (size_t j = 0; j < pts.size(); ++j) {
        if (j != i) others.push_back(pts[j]);
      }
      bool inside = polytope_contains(Polytope(others), pts[i]);
      CHECK(inside != (vertex_set.count(pts[i]) == 1));
    }
  }
}

TEST_CASE("convex_hull is idempotent and input-order invariant") {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntVector> pts;
    size_t count = 3 + rng.below(9);
    for (size_t i = 0; i < count; ++i) {
      pts.push_back(vec({rng.range(0, 5), rng.range(0, 5), rng.range(0, 5)}));
    }
    HullResult h = convex_hull(pts);
    // idempotence on the vertex set
    HullResult h2 = convex_hull(h.vertices);
    CHECK(h2.vertices == h.vertices);
    // permutation and duplication invariance
    std::vector<IntVector> shuffled = pts;
    for (size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    shuffled.push_back(shuffled[0]);
    CHECK(convex_hull(shuffled).vertices == h.vertices);
  }
}

TEST_CASE("feasible worked examples") {
  SUBCASE("empty polygon") {
    // x >= 0, y >= 0, x + y <= -1
    std::vector<LinearConstraint> cs = {
        {{Rat(1), Rat(0)}, Rat(0)},
        {{Rat(0), Rat(1)}, Rat(0)},
        {{Rat(-1), Rat(-1)}, Rat(1)},
    };
    CHECK_FALSE(feasible(cs, 2).feasible);
  }
  SUBCASE("origin witness") {
    std::vector<LinearConstraint> cs = {
        {{Rat(1), Rat(0)}, Rat(0)},
        {{Rat(0), Rat(1)}, Rat(0)},
        {{Rat(1), Rat(1)}, Rat(0)},
    };
    FeasibleResult r = feasible(cs, 2);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] == 0);
    CHECK(r.witness[1] == 0);
  }
  SUBCASE("membership system for (1,0) in the leg-(1,2) polyhedron") {
    // lambda (1,0) + (1-lambda)(0,2) <= (1,0) with 0 <= lambda <= 1:
    // by hand elimination, only lambda = 1 works, so the system is feasible.
    std::vector<LinearConstraint> cs = {
        {{Rat(1)}, Rat(0)},
        {{Rat(-1)}, Rat(-1)},
        {{Rat(-1)}, Rat(-1)},   // lambda*1 <= 1
        {{Rat(2)}, Rat(2)},     // (1-lambda)*2 <= 0
    };
    FeasibleResult r = feasible(cs, 1);
    REQUIRE(r.feasible);
    CHECK(r.witness[0] == 1);
  }
  SUBCASE("dimension mismatch") {
    std::vector<LinearConstraint> cs = {{{Rat(1)}, Rat(0)}};
    CHECK_THROWS_AS(feasible(cs, 2), DimensionMismatch);
  }
}

TEST_CASE("feasible agrees with brute-force lattice scanning") {
  Rng rng(55);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2;
    std::vector<LinearConstraint> cs;
    // box |x_i| <= 4 keeps the scan finite
    for (int i = 0; i < n; ++i) {
      LinearConstraint lo{std::vector<Rat>(n, Rat(0)), Rat(-4)};
      lo.coeffs[static_cast<size_t>(i)] = 1;
      LinearConstraint hi{std::vector<Rat>(n, Rat(0)), Rat(-4)};
      hi.coeffs[static_cast<size_t>(i)] = -1;
      cs.push_back(lo);
      cs.push_back(hi);
    }
    int extra = 1 + static_cast<int>(rng.below(3));
    for (int e = 0; e < extra; ++e) {
      LinearConstraint c{std::vector<Rat>(n), Rat(rng.range(-4, 4))};
      for (int i = 0; i < n; ++i) c.coeffs[static_cast<size_t>(i)] = Rat(rng.range(-3, 3));
      cs.push_back(c);
    }
    FeasibleResult r = feasible(cs, n);
    bool lattice_point = false;
    for (long x = -4; x <= 4 && !lattice_point; ++x) {
      for (long y = -4; y <= 4 && !lattice_point; ++y) {
        bool ok = true;
        for (const LinearConstraint& c : cs) {
          if (c.coeffs[0] * x + c.coeffs[1] * y < c.rhs) {
            ok = false;
            break;
          }
        }
        lattice_point = ok;
      }
    }
    if (lattice_point) CHECK(r.feasible);
    if (!r.feasible) CHECK_FALSE(lattice_point);
    if (r.feasible) {
      for (const LinearConstraint& c : cs) {
        Rat lhs = c.coeffs[0] * r.witness[0] + c.coeffs[1] * r.witness[1];
        CHECK(lhs >= c.rhs);
      }
    }
  }
}

TEST_CASE("simplex_volume worked examples") {
  CHECK(simplex_volume({vec({0, 0}), vec({1, 0}), vec({0, 1})}) == 1);
  CHECK(simplex_volume({vec({0, 0}), vec({2, 0}), vec({0, 2})}) == 4);
  CHECK(simplex_volume({vec({0, 0}), vec({1, 0}), vec({2, 0})}) == 0);
  CHECK_THROWS_AS(simplex_volume({vec({0, 0}), vec({1, 0})}), DimensionMismatch);
}

TEST_CASE("simplex_volume is invariant under permutation and unimodular maps") {
  Rng rng(66);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntVector> verts;
    for (int i = 0; i < 4; ++i) {
      verts.push_back(vec({rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5)}));
    }
    Rat vol = simplex_volume(verts);
    std::vector<IntVector> perm = verts;
    for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    CHECK(simplex_volume(perm) == vol);
    // random unimodular map: a few elementary row additions and swaps
    std::vector<IntVector> mapped = verts;
    for (int step = 0; step < 4; ++step) {
      int a = static_cast<int>(rng.below(3)), b = static_cast<int>(rng.below(3));
      if (a == b) continue;
      long f = rng.range(-2, 2);
      for (IntVector& v : mapped) v[a] += Int(f) * v[b];
    }
    CHECK(simplex_volume(mapped) == vol);
  }
}
