#include <doctest.h>

#include "relmix/io.hpp"
#include "relmix/render.hpp"
#include "relmix/verify.hpp"
#include "test_helpers.hpp"

using namespace relmix;
using namespace relmix::testing;

TEST_CASE("documents parse and round-trip") {
  SUBCASE("polyhedron") {
    OrthantPolyhedron b =
        parse_polyhedron(R"({"dim": 2, "generators": [[3,0],[1,1],[0,3]]})");
    CHECK(b == orthant(2, {{3, 0}, {1, 1}, {0, 3}}));
    std::string text = serialize_polyhedron(b);
    CHECK(parse_polyhedron(text) == b);
    CHECK(serialize_polyhedron(parse_polyhedron(text)) == text);
  }
  SUBCASE("tuple") {
    PolyTuple t = parse_tuple(
        R"({"dim": 2, "polyhedra": [{"generators": [[2,0],[0,2]]}, {"generators": [[3,0],[1,1],[0,3]]}]})");
    CHECK(t.dim() == 2);
    CHECK(t[0] == orthant(2, {{2, 0}, {0, 2}}));
    std::string text = serialize_tuple(t);
    CHECK(parse_tuple(text) == t);
    CHECK(serialize_tuple(parse_tuple(text)) == text);
  }
  SUBCASE("random canonical round trips") {
    Rng rng(1525);
    for (int trial = 0; trial < 30; ++trial) {
      PolyTuple t = random_tuple(rng, 2 + static_cast<int>(rng.below(2)), 5);
      CHECK(parse_tuple(serialize_tuple(t)) == t);
    }
  }
}

TEST_CASE("strict parsing rejects malformed documents") {
  CHECK_THROWS_AS(parse_polyhedron("not json"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron(R"([1,2,3])"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron(R"({"generators": [[1,0],[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_polyhedron(R"({"dim": 2})"), ParseError);
  CHECK_THROWS_AS(
      parse_polyhedron(R"({"dim": 2, "generators": [[1,0],[0,1]], "x": 1})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_polyhedron(R"({"dim": 2, "generators": [[1.5,0],[0,1]]})"),
      ParseError);
  CHECK_THROWS_AS(parse_polyhedron(R"({"dim": 2, "generators": [[1,0,0],[0,1]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_polyhedron(R"({"dim": 2, "generators": []})"), ParseError);
  // invariant violations surface as input errors too
  CHECK_THROWS_AS(parse_polyhedron(R"({"dim": 2, "generators": [[1,1]]})"),
                  UnboundedComplement);
  CHECK_THROWS_AS(parse_polyhedron(R"({"dim": 2, "generators": [[-1,0],[0,1]]})"),
                  NegativeCoordinate);

  CHECK_THROWS_AS(
      parse_tuple(R"({"dim": 2, "polyhedra": [{"generators": [[1,0],[0,1]]}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_tuple(
          R"({"dim": 2, "polyhedra": [{"generators": [[1,0],[0,1]], "dim": 2}, {"generators": [[1,0],[0,1]]}]})"),
      ParseError);
}

TEST_CASE("canonical hash is stable and sensitive") {
  PolyTuple a({csimplex({2, 2}), csimplex({1, 1})});
  PolyTuple b({csimplex({1, 2}), csimplex({1, 2})});
  CHECK(canonical_hash(a) == canonical_hash(a));
  CHECK(canonical_hash_hex(a).size() == 16);
  CHECK(canonical_hash(a) != canonical_hash(b));
}

TEST_CASE("classify report is deterministic key-value text") {
  PolyTuple t({csimplex({2, 2}), csimplex({1, 1})});
  std::string report = classify_report(t);
  CHECK(report ==
        "rmv: 2\n"
        "interlaced: false\n"
        "matching: none\n"
        "obstruction-rows: 1 2\n"
        "obstruction-cols: 1\n"
        "minimal: true\n");
  CHECK(classify_report(t) == report);

  CHECK(classify_report(PolyTuple({csimplex({1, 1}), csimplex({1, 1})})) ==
        "rmv: 1\n"
        "interlaced: true\n"
        "matching: 1 2\n"
        "minimal: true\n");

  PolyTuple blocked({csimplex({1, 2}), csimplex({1, 2})});
  CHECK(classify_report(blocked) ==
        "rmv: 2\n"
        "interlaced: true\n"
        "matching: none\n"
        "obstruction-rows: 2\n"
        "obstruction-cols: 1 2\n"
        "minimal: true\n");
}

TEST_CASE("svg rendering") {
  OrthantPolyhedron a = orthant(2, {{2, 0}, {0, 2}});
  OrthantPolyhedron b = orthant(2, {{3, 0}, {1, 1}, {0, 3}});
  SUBCASE("deterministic bytes") {
    std::string one = render_svg({a, b});
    std::string two = render_svg({a, b});
    CHECK(one == two);
    CHECK(one.find("<svg") == 0);
    CHECK(one.find("<polygon") != std::string::npos);
    CHECK(one.find("(1,1)") != std::string::npos);
  }
  SUBCASE("single polyhedron") {
    std::string svg = render_svg({csimplex({1, 1})});
    CHECK(svg.find("<polygon") != std::string::npos);
  }
  SUBCASE("only dimension two") {
    CHECK_THROWS_AS(render_svg({csimplex({1, 1, 1})}), DimensionMismatch);
  }
}
